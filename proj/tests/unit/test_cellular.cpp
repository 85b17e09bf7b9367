#include "doctest.h"
#include "toric_cobordism/cellular.hpp"

using namespace tcob;

namespace {

HomologyTable closed_homology(const CharacteristicPair& p, Ring ring) {
  return homology(chain_complex(build_quotient_complex(p), ring));
}

std::vector<std::size_t> betti(const HomologyTable& t) {
  std::vector<std::size_t> b;
  for (const auto& g : t) b.push_back(g.betti);
  return b;
}

}  // namespace

TEST_CASE("real projective plane") {
  const auto rp2 = standard_pair(StandardKind::RealProjective, 2);
  const auto qc = build_quotient_complex(rp2);
  REQUIRE(qc.cells.size() == 3);
  CHECK(qc.cells[0].size() == 3);
  CHECK(qc.cells[1].size() == 6);
  CHECK(qc.cells[2].size() == 4);
  const auto cc = chain_complex(qc, Ring::Z);
  CHECK(euler_characteristic(cc) == 1);
  const auto h = homology(cc);
  CHECK(h[0].betti == 1);
  CHECK(h[1].betti == 0);
  CHECK(h[1].torsion == std::vector<Integer>{2});
  CHECK(h[2].betti == 0);
  CHECK(h[2].torsion.empty());
  CHECK(betti(closed_homology(rp2, Ring::GF2)) == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("boundaries square to zero on every generated complex") {
  std::vector<std::pair<CharacteristicPair, FacetMask>> cases;
  for (std::size_t m = 2; m <= 5; ++m) cases.push_back({standard_pair(StandardKind::RealProjective, m), 0});
  for (std::size_t k = 2; k <= 3; ++k) {
    const auto fam = build_family(k, Ring::GF2);
    cases.push_back({fam.full, 0});
    cases.push_back({fam.full, cut_facet_mask(fam.full.polytope)});
    for (const auto& b : fam.boundary) cases.push_back({b, 0});
  }
  for (const auto& [pair, excluded] : cases) {
    const auto qc = build_quotient_complex(pair, excluded);
    for (Ring ring : {Ring::Z, Ring::GF2}) {
      const auto cc = chain_complex(qc, ring);
      CHECK(boundary_squares_to_zero(cc));
      CHECK(euler_characteristic(cc) == euler_characteristic(homology(cc)));
    }
  }
}

TEST_CASE("top homology of a closed small cover detects orientability") {
  std::vector<CharacteristicPair> pairs;
  for (std::size_t m = 2; m <= 5; ++m) pairs.push_back(standard_pair(StandardKind::RealProjective, m));
  for (std::size_t k = 2; k <= 3; ++k)
    for (const auto& b : build_family(k, Ring::GF2).boundary) pairs.push_back(b);
  for (const auto& p : pairs) {
    const auto h = closed_homology(p, Ring::Z);
    const auto& top = h.at(p.polytope.dim());
    CHECK(h[0].betti == 1);
    CHECK(h[0].torsion.empty());
    CHECK((top.betti == 1 && top.torsion.empty()) == orientable_small_cover(p));
  }
}

TEST_CASE("remaining boundary piece has the mod 2 homology of projective space") {
  for (std::size_t k = 2; k <= 3; ++k) {
    const auto fam = build_family(k, Ring::GF2);
    const auto b = betti(closed_homology(fam.boundary[2], Ring::GF2));
    CHECK(b == std::vector<std::size_t>(2 * k, 1));
  }
}

TEST_CASE("index sets") {
  const std::vector<std::vector<std::size_t>> expected = {{0, 2, 3, 2, 1}, {0, 2, 3, 4, 3, 2, 1}};
  for (std::size_t k = 2; k <= 4; ++k) {
    const auto fam = build_family(k, Ring::Z);
    const auto& q = fam.full.polytope;
    const auto cuts = cut_facet_mask(q);
    const auto anchored = vertex_indices(q, anchored_functional(q, 0), cuts);
    CHECK(anchored.I[2 * k].size() == 1);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto l = random_functional(q, seed);
      CHECK(distinguishes_vertices(q, l));
      const auto prof = vertex_indices(q, l, cuts);
      CHECK(prof.sizes() == anchored.sizes());
      if (k <= 3) CHECK(prof.sizes() == expected[k - 2]);
      // Literal and strict counting coincide here.
      CHECK(vertex_indices(q, l, cuts, false).sizes() == prof.sizes());
    }
  }
}

TEST_CASE("relative homology of W is concentrated in odd degrees") {
  for (std::size_t k = 2; k <= 5; ++k) {
    const auto fam = build_family(k, Ring::Z);
    const auto l = random_functional(fam.full.polytope, 17);
    IndexProfile prof;
    const auto h = homology_W_rel_boundary(fam, l, &prof);
    const std::size_t n = 2 * k;
    REQUIRE(h.size() == 2 * n);
    CHECK(h[0].betti == 1);
    for (std::size_t d = 1; d < h.size(); ++d) {
      CHECK(h[d].torsion.empty());
      if (d % 2 == 0) CHECK(h[d].betti == 0);
      else CHECK(h[d].betti == prof.I[(d + 1) / 2].size());
    }
    CHECK(h[2 * n - 1].betti == 1);
  }
}

TEST_CASE("euler characteristic of the relative complex matches the index count") {
  for (std::size_t k = 2; k <= 3; ++k) {
    const auto fam = build_family(k, Ring::GF2);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto e = euler_cross_check(fam, random_functional(fam.full.polytope, seed));
      CHECK(e.agree);
      CHECK(e.complex_side == (k == 2 ? 0 : -1));
    }
  }
}

TEST_CASE("orientability of the small cover cobordism") {
  const auto four = is_orientable_space(build_family(2, Ring::GF2));
  REQUIRE(four.oracle_used);
  CHECK_FALSE(four.orientable);
  CHECK(four.oracle->at(4).betti == 0);
  CHECK(four.d_n == 2);

  const auto six_fam = build_family(3, Ring::GF2);
  const auto six = is_orientable_space(six_fam);
  REQUIRE(six.oracle_used);
  CHECK(six.orientable);
  CHECK(six.oracle->at(6).betti == 1);
  CHECK(six.oracle->at(6).torsion.empty());
  CHECK(gluing_orientation_oracle(six_fam) == -1);

  const auto ten = is_orientable_space(build_family(5, Ring::GF2));
  CHECK_FALSE(ten.oracle_used);
  CHECK(ten.orientable);
  CHECK_THROWS_AS(is_orientable_space(build_family(2, Ring::Z)), std::invalid_argument);
}
