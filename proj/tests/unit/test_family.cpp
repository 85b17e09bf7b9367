#include "doctest.h"
#include "toric_cobordism/family.hpp"

using namespace tcob;

namespace {

// The characteristic vectors written out from their definition.
std::vector<IntVector> xi_by_hand(std::size_t n) {
  std::vector<IntVector> out(n + 1, IntVector(n - 1, 0));
  const std::size_t h = n / 2;
  for (std::size_t j = 0; j <= n; ++j) {
    if (j + 1 < h) {
      out[j][j] = 1;
    } else if (j + 1 == h) {
      for (std::size_t p = 1; p <= h; ++p) out[j][p - 1] = 1;
    } else if (j < n) {
      out[j][j - 1] = 1;
    } else {
      for (std::size_t p = h; p <= n - 1; ++p) out[j][p - 1] = 1;
    }
  }
  return out;
}

std::size_t rational_rank(const std::vector<IntVector>& vs) {
  RationalMatrix m;
  for (const auto& v : vs) {
    RationalVector row;
    for (auto x : v) row.emplace_back(x);
    m.push_back(row);
  }
  return rank(m);
}

// Exhaustive search for y with <y, v> = 1 for every assigned vector.
bool orientable_brute_force(const CharacteristicPair& p) {
  const std::size_t r = p.chi.rank();
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << r); ++y) {
    bool ok = true;
    for (std::size_t f = 0; f < p.chi.facet_count() && ok; ++f) {
      if (!p.chi.is_assigned(f)) continue;
      int dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += ((y >> i) & 1) * (p.chi.vector(f)[i] & 1);
      ok = dot % 2 == 1;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("xi for n = 4") {
  const std::vector<IntVector> expected = {{1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}};
  CHECK(xi(4) == expected);
  CHECK(xi_index_of_facet(4, 0) == 4);
}

TEST_CASE("xi and mu follow their definition") {
  for (std::size_t n = 4; n <= 12; n += 2) {
    CHECK(xi(n) == xi_by_hand(n));
    const auto m = mu(n);
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i < n - 1; ++i) CHECK(m[j][i] == (xi(n)[j][i] & 1));
  }
}

TEST_CASE("xi dependencies on the two cut faces") {
  for (std::size_t n = 4; n <= 10; n += 2) {
    const auto x = xi(n);
    const std::size_t h = n / 2;
    const std::vector<IntVector> low(x.begin(), x.begin() + h + 1), high(x.begin() + h, x.end());
    CHECK(rational_rank(low) < low.size());
    CHECK(rational_rank(high) < high.size());
    for (std::size_t drop = 0; drop < low.size(); ++drop) {
      auto v = low;
      v.erase(v.begin() + drop);
      CHECK(is_direct_summand(v, n - 1));
    }
    for (std::size_t drop = 0; drop < high.size(); ++drop) {
      auto v = high;
      v.erase(v.begin() + drop);
      CHECK(is_direct_summand(v, n - 1));
    }
  }
}

TEST_CASE("rho and the facet permutation") {
  for (std::size_t n = 4; n <= 10; n += 2) {
    const auto r = rho(n);
    const auto p = phi_permutation(n);
    REQUIRE(p.size() == n + 1);
    for (std::size_t a = 0; a <= n; ++a) {
      CHECK(p[p[a]] == a);
      CHECK(p[a] == n - r[n - a]);
    }
    // Sign alternates with n/2.
    CHECK(permutation_sign(r) == (n % 4 == 0 ? 1 : -1));
  }
}

TEST_CASE("the gluing matrices") {
  for (std::size_t n = 4; n <= 10; n += 2) {
    const auto h = h_matrix(n);
    for (std::size_t i = 0; i < n - 1; ++i)
      for (std::size_t j = 0; j < n - 1; ++j) CHECK(h(i, j) == (i + j == n - 2 ? 1 : 0));
    CHECK((det_sign(h) == -1) == (n % 4 == 0));
    CHECK(det_sign(f_matrix(n)) == -1);
    CHECK(hs_matrix(n) == h);
  }
}

TEST_CASE("family construction") {
  for (std::size_t k = 2; k <= 5; ++k) {
    const auto fam = build_family(k, Ring::Z);
    CHECK(fam.n == 2 * k);
    CHECK(validate(fam.full).valid);
    for (const auto& b : fam.boundary) CHECK(validate(b).valid);
    const auto g = gluing_translation(fam, fam.h);
    CHECK(verify_delta_translation(fam.boundary[0], fam.boundary[1], g));
    CHECK(orientation_effect(fam.boundary[0], fam.boundary[1], g) == -1);

    const auto s = build_family(k, Ring::GF2);
    const auto gs = gluing_translation(s, s.hs);
    CHECK(verify_delta_translation(s.boundary[0], s.boundary[1], gs));
  }
  CHECK_THROWS_AS(build_family(1, Ring::Z), std::invalid_argument);
}

TEST_CASE("small cover orientability of the boundary pieces") {
  for (std::size_t k = 2; k <= 3; ++k) {
    const auto fam = build_family(k, Ring::GF2);
    for (const auto& b : fam.boundary) CHECK(orientable_small_cover(b) == orientable_brute_force(b));
  }
  const auto six = build_family(3, Ring::GF2);
  for (const auto& b : six.boundary) CHECK(orientable_small_cover(b));
  // At n = 4 only the simplex piece is orientable.
  const auto four = build_family(2, Ring::GF2);
  CHECK_FALSE(orientable_small_cover(four.boundary[0]));
  CHECK_FALSE(orientable_small_cover(four.boundary[1]));
  CHECK(orientable_small_cover(four.boundary[2]));
}

TEST_CASE("reflection count") {
  for (std::size_t n = 4; n <= 12; n += 2) {
    const auto rc = reflection_count(n);
    CHECK(rc.count == n / 2);
    CHECK(rc.support_lower.size() == n / 2);
    CHECK(rc.support_top.size() == n / 2);
    CHECK(rc.d_n == (n % 4 == 0 ? 2 : 0));
  }
}
