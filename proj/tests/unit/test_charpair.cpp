#include <numeric>
#include <random>

#include "doctest.h"
#include "toric_cobordism/family.hpp"

using namespace tcob;

namespace {

// Random product of elementary operations; det is +-1.
IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  for (int step = 0; step < 6; ++step) {
    const std::size_t i = rng() % n, j = rng() % n;
    if (i == j) {
      for (std::size_t c = 0; c < n; ++c) u(i, c) = -u(i, c);
      continue;
    }
    const long long m = static_cast<long long>(rng() % 5) - 2;
    for (std::size_t c = 0; c < n; ++c) u(i, c) += m * u(j, c);
  }
  return u;
}

CharacteristicPair transform(const CharacteristicPair& p, const IntMatrix& u, std::mt19937_64& rng) {
  CharacteristicPair out = p;
  out.chi = CharacteristicFunction(p.chi.ring(), p.chi.rank(), p.chi.facet_count());
  for (std::size_t f = 0; f < p.chi.facet_count(); ++f) {
    if (p.chi.is_free(f)) {
      out.chi.set_free(f);
      continue;
    }
    IntVector v = u.apply(p.chi.vector(f));
    if (rng() & 1)
      for (auto& x : v) x = -x;
    out.chi.assign(f, v);
  }
  return out;
}

std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

TEST_CASE("standard pairs") {
  for (std::size_t m = 2; m <= 6; ++m) {
    CHECK(validate(standard_pair(StandardKind::ComplexProjective, m)).valid);
    const auto rp = standard_pair(StandardKind::RealProjective, m);
    CHECK(validate(rp).valid);
    CHECK(orientable_small_cover(rp) == (m % 2 == 1));
  }
  CHECK(standard_name(StandardKind::ComplexProjective, 3, true) == "conjugate CP3");
  CHECK(standard_name(StandardKind::RealProjective, 5, false) == "RP5");
}

TEST_CASE("orientability needs a GF(2) pair") {
  CHECK_THROWS_AS(orientable_small_cover(standard_pair(StandardKind::ComplexProjective, 2)), CharacteristicError);
}

TEST_CASE("validity fails at the vertices of a bad vector") {
  auto p = standard_pair(StandardKind::ComplexProjective, 3);
  p.chi.assign(1, {2, 0, 0});
  const auto r = validate(p);
  CHECK_FALSE(r.valid);
  // D1 misses only A1, so it meets the other three vertices.
  CHECK(r.failures.size() == 3);
  CHECK(r.vertices_checked == 4);
}

TEST_CASE("validity is invariant under sign flips and unimodular changes") {
  std::mt19937_64 rng(99);
  const auto fam4 = build_family(2, Ring::Z);
  const auto fam6 = build_family(3, Ring::Z);
  auto broken = standard_pair(StandardKind::ComplexProjective, 4);
  broken.chi.assign(2, {1, 1, 1, 1});
  REQUIRE_FALSE(validate(broken).valid);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& base = trial % 2 ? fam4.full : fam6.full;
    const auto u = random_unimodular(rng, base.chi.rank());
    const auto moved = transform(base, u, rng);
    REQUIRE(validate(moved).valid);
    const DeltaTranslation t{identity(base.polytope.facet_count()), u};
    REQUIRE(verify_delta_translation(base, moved, t));

    const auto ub = random_unimodular(rng, 4);
    const auto moved_broken = transform(broken, ub, rng);
    const auto r = validate(moved_broken);
    REQUIRE_FALSE(r.valid);
    REQUIRE(r.failures.size() == validate(broken).failures.size());
  }
}

TEST_CASE("mod 2 reduction") {
  const auto z = build_family(2, Ring::Z);
  const auto g = build_family(2, Ring::GF2);
  CHECK(z.full.chi.reduced_mod2() == g.full.chi);
  CHECK(validate(g.full).valid);
  CHECK(g.full.chi.same_class({1, 0, 1}, {1, 2, -1}));
  CHECK_FALSE(z.full.chi.same_class({1, 0, 1}, {1, 2, -1}));
  CHECK(z.full.chi.same_class({1, 0, -1}, {-1, 0, 1}));
}

TEST_CASE("translations compose") {
  std::mt19937_64 rng(5);
  const auto a = standard_pair(StandardKind::ComplexProjective, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto u1 = random_unimodular(rng, 3), u2 = random_unimodular(rng, 3);
    const auto b = transform(a, u1, rng);
    const auto c = transform(b, u2, rng);
    const DeltaTranslation t1{identity(4), u1}, t2{identity(4), u2};
    const auto t = compose(t1, t2, Ring::Z);
    REQUIRE(verify_delta_translation(a, c, t));
    CHECK(orientation_effect(a, c, t) == orientation_effect(a, b, t1) * orientation_effect(b, c, t2));
    CHECK(orientation_effect(a, b, t1) == det_sign(u1));
  }
}

TEST_CASE("translation search") {
  const auto cp = standard_pair(StandardKind::ComplexProjective, 3);
  const auto conj = standard_pair(StandardKind::ComplexProjective, 3, true);
  const auto t = find_delta_translation(cp, conj);
  REQUIRE(t);
  CHECK(verify_delta_translation(cp, conj, *t));
  const auto all = find_all_delta_translations(cp, cp);
  // 24 facet permutations, each with two sign classes of delta.
  CHECK(all.size() == 48);
  int plus = 0;
  for (const auto& x : all) plus += orientation_effect(cp, cp, x) == 1;
  CHECK(plus == 24);

  const auto rp = standard_pair(StandardKind::RealProjective, 3);
  CHECK_FALSE(find_delta_translation(rp, standard_pair(StandardKind::RealProjective, 2)));
}

TEST_CASE("restriction to a facet") {
  const auto fam = build_family(2, Ring::Z);
  for (const auto& b : fam.boundary) {
    CHECK(validate(b).valid);
    CHECK(b.polytope.dim() == 3);
    CHECK(b.chi.rank() == 3);
  }
  CHECK_THROWS_AS(restrict(fam.full, fam.full.polytope.facet_id("D0")), CharacteristicError);
}

TEST_CASE("isotropy subspaces") {
  const auto rp = standard_pair(StandardKind::RealProjective, 3);
  const FacetMask all_but_one = facet_bit(1) | facet_bit(2) | facet_bit(3);
  CHECK(isotropy_gf2(rp.chi, all_but_one).dimension() == 3);
  CHECK(isotropy_gf2(rp.chi, facet_bit(0)).dimension() == 1);
  CHECK(isotropy_gf2(rp.chi, 0).dimension() == 0);
}
