#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "toric_cobordism/exactalg.hpp"

using namespace tcob;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int range) {
  IntMatrix m(r, c);
  std::uniform_int_distribution<int> d(-range, range);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Leibniz expansion; fine up to 6x6.
Integer leibniz(const IntMatrix& m) {
  std::vector<std::size_t> p(m.rows());
  std::iota(p.begin(), p.end(), 0);
  Integer total = 0;
  do {
    Integer term = permutation_sign(p);
    for (std::size_t i = 0; i < p.size(); ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// gcd of all k x k minors = d_1 * ... * d_k.
Integer minor_gcd(const IntMatrix& m, std::size_t k) {
  Integer g = 0;
  std::vector<bool> rsel(m.rows()), csel(m.cols());
  std::fill(rsel.end() - k, rsel.end(), true);
  do {
    std::fill(csel.begin(), csel.end(), false);
    std::fill(csel.end() - k, csel.end(), true);
    do {
      IntMatrix sub(k, k);
      std::size_t a = 0;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!rsel[i]) continue;
        std::size_t b = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
          if (csel[j]) sub(a, b++) = m(i, j);
        ++a;
      }
      g = boost::multiprecision::gcd(g, abs(leibniz(sub)));
    } while (std::next_permutation(csel.begin(), csel.end()));
  } while (std::next_permutation(rsel.begin(), rsel.end()));
  return g;
}

}  // namespace

TEST_CASE("smith normal form recomposes on seeded random matrices") {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    const auto m = random_matrix(rng, r, c, trial % 3 == 0 ? 2 : 9);
    const auto s = smith_normal_form(m);
    REQUIRE(s.u * m * s.v == s.d);
    REQUIRE(abs(determinant(s.u)) == 1);
    REQUIRE(abs(determinant(s.v)) == 1);
    const auto f = s.invariant_factors();
    REQUIRE(f.size() == s.rank);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j || i >= s.rank) REQUIRE(s.d(i, j) == 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
      REQUIRE(f[i] > 0);
      if (i + 1 < f.size()) REQUIRE(f[i + 1] % f[i] == 0);
    }
    REQUIRE(invariant_factors(m) == f);
  }
}

TEST_CASE("invariant factors match the gcd of minors") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_matrix(rng, 3, 4, 6);
    const auto f = invariant_factors(m);
    Integer prod = 1;
    for (std::size_t k = 1; k <= 3; ++k) {
      const Integer g = minor_gcd(m, k);
      if (k <= f.size()) {
        prod *= f[k - 1];
        CHECK(g == prod);
      } else {
        CHECK(g == 0);
      }
    }
  }
}

TEST_CASE("smith normal form of small fixed matrices") {
  CHECK(invariant_factors(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) == std::vector<Integer>{2, 6, 12});
  CHECK(invariant_factors(IntMatrix{{0, 0}, {0, 0}}).empty());
  CHECK(invariant_factors(IntMatrix{{2, 0}, {0, 3}}) == std::vector<Integer>{1, 6});
}

TEST_CASE("bareiss determinant agrees with leibniz") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const auto m = random_matrix(rng, n, n, 5);
    REQUIRE(determinant(m) == leibniz(m));
    REQUIRE(det_sign(m) == (leibniz(m) > 0 ? 1 : leibniz(m) < 0 ? -1 : 0));
  }
}

TEST_CASE("direct summands") {
  const std::vector<IntVector> basis = {{1, 0, 0}, {1, 1, 0}};
  CHECK(is_direct_summand(basis, 3));
  const std::vector<IntVector> doubled = {{2, 0, 0}};
  CHECK_FALSE(is_direct_summand(doubled, 3));
  const std::vector<IntVector> lattice = {{1, 1}, {1, -1}};  // index 2
  CHECK_FALSE(is_direct_summand(lattice, 2));
  const std::vector<IntVector> dependent = {{1, 0}, {0, 1}, {1, 1}};
  CHECK_FALSE(is_direct_summand(dependent, 2));
}

TEST_CASE("permutation sign") {
  const std::vector<std::size_t> id = {0, 1, 2, 3};
  const std::vector<std::size_t> swap = {1, 0, 2, 3};
  const std::vector<std::size_t> cycle = {1, 2, 0, 3};
  CHECK(permutation_sign(id) == 1);
  CHECK(permutation_sign(swap) == -1);
  CHECK(permutation_sign(cycle) == 1);
  const std::vector<std::size_t> bad = {0, 0, 1};
  CHECK_THROWS_AS(permutation_sign(bad), std::invalid_argument);
}

TEST_CASE("gf2 solve and cosets") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    Gf2Matrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a.set(i, j, rng() & 1);
    Gf2Vector x(c);
    for (std::size_t j = 0; j < c; ++j) x.set(j, rng() & 1);
    const auto b = a.apply(x);
    const auto y = solve_gf2(a, b);
    REQUIRE(y.has_value());
    REQUIRE(a.apply(*y) == b);
  }
  Gf2Subspace s(3);
  CHECK(s.insert(Gf2Vector::from_ints({1, 1, 0})));
  CHECK_FALSE(s.insert(Gf2Vector::from_ints({1, 1, 0})));
  CHECK(s.coset_representatives().size() == 4);
  CHECK(s.reduce(Gf2Vector::from_ints({1, 1, 0})) == Gf2Vector(3));
  CHECK(s.reduce(Gf2Vector::from_ints({1, 0, 1})) == s.reduce(Gf2Vector::from_ints({0, 1, 1})));
}

TEST_CASE("rationals") {
  CHECK(parse_rational("1/6") == Rational(1, 6));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(to_string(Rational(2, 4)) == "1/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  const RationalMatrix m = {{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
  const auto x = solve_unique(m, {Rational(5), Rational(6)});
  REQUIRE(x);
  CHECK((*x)[0] == Rational(-4));
  CHECK((*x)[1] == Rational(9, 2));
  CHECK(rank(RationalMatrix{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) == 1);
}

TEST_CASE("sparse matrices") {
  SparseIntMatrix a(2, 2), b(2, 1);
  a.add(0, 0, 1);
  a.add(1, 1, 2);
  b.add(0, 0, 3);
  b.add(1, 0, 1);
  const auto p = a.multiply(b);
  CHECK(p.to_dense() == IntMatrix{{3}, {2}});
  CHECK(a.invariant_factors() == std::vector<Integer>{1, 2});
  CHECK(a.rank_gf2() == 1);
  a.add(1, 1, -2);
  CHECK(a.rank_gf2() == 1);
  CHECK(a.invariant_factors() == std::vector<Integer>{1});
}
