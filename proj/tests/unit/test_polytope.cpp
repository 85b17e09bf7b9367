#include <numeric>

#include "doctest.h"
#include "toric_cobordism/polytope.hpp"

using namespace tcob;

namespace {

std::vector<std::size_t> inverse(const std::vector<std::size_t>& p) {
  std::vector<std::size_t> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}

std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

TEST_CASE("simplex") {
  const auto s = simplex(3);
  CHECK(s.vertex_count() == 4);
  CHECK(s.facet_count() == 4);
  CHECK(s.f_vector() == std::vector<std::size_t>{4, 6, 4});
  CHECK(s.satisfies_euler_relation());
  CHECK(s.facet_tag(0) == "D0");
  // Facet D_j misses A_j = e_j.
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t v : s.facet_vertices(j)) CHECK(s.coordinates()[v][j] == 0);
}

TEST_CASE("unit square by enumeration") {
  HalfspaceSystem sys;
  sys.ambient_dim = 2;
  sys.inequalities = {{{1, 0}, 0, "x>=0"}, {{0, 1}, 0, "y>=0"}, {{-1, 0}, -1, "x<=1"}, {{0, -1}, -1, "y<=1"}};
  CHECK(enumerate_vertices(sys).size() == 4);
  const auto p = polytope_from_halfspaces(sys);
  CHECK(p.edges().size() == 4);
  sys.inequalities.pop_back();
  CHECK_THROWS_AS(enumerate_vertices(sys), UnboundedSystem);
}

TEST_CASE("truncated simplex sizes") {
  const std::size_t expected[] = {16, 30, 48, 70};
  for (std::size_t k = 2; k <= 5; ++k) {
    const auto q = build_delta_Q(2 * k, Rational(1, 6), Rational(1, 4));
    CHECK(q.vertex_count() == expected[k - 2]);
    CHECK(q.facet_count() == 2 * k + 4);
    CHECK(q.satisfies_euler_relation());
    CHECK(q.find_facet("P1"));
    CHECK(q.find_facet("P3"));
  }
}

TEST_CASE("truncated simplex does not depend on admissible cut depths") {
  const auto base = build_delta_Q(6, Rational(1, 6), Rational(1, 4));
  const std::pair<Rational, Rational> depths[] = {
      {Rational(1, 10), Rational(1, 5)}, {Rational(1, 20), Rational(1, 3)}, {Rational(1, 5), Rational(2, 7)}};
  for (const auto& [r1, r2] : depths) {
    const auto q = build_delta_Q(6, r1, r2);
    const auto phi = is_combinatorially_isomorphic(base, q);
    REQUIRE(phi);
    // Tags are preserved, not just the combinatorial type.
    for (std::size_t f = 0; f < base.facet_count(); ++f) CHECK(q.find_facet(base.facet_tag(f)));
  }
  CHECK_THROWS_AS(build_delta_Q(6, Rational(1, 4), Rational(1, 6)), std::invalid_argument);
  CHECK_THROWS_AS(build_delta_Q(6, Rational(1, 6), Rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(build_delta_Q(5, Rational(1, 6), Rational(1, 4)), std::invalid_argument);
}

TEST_CASE("facets and products") {
  const auto s = simplex(3);
  const auto f = facet_polytope(s, 0);
  CHECK(f.dim() == 2);
  CHECK(is_combinatorially_isomorphic(f, simplex(2)));
  const auto p = product(simplex(1), simplex(2));
  CHECK(p.dim() == 3);
  CHECK(p.vertex_count() == 6);
  CHECK(p.facet_count() == 5);
  CHECK_FALSE(is_combinatorially_isomorphic(p, simplex(3)));
}

TEST_CASE("isomorphisms are reflexive and symmetric") {
  const auto q = build_delta_Q(4, Rational(1, 6), Rational(1, 4));
  CHECK(verify_isomorphism(q, q, identity(q.facet_count())));
  std::size_t count = 0;
  for_each_isomorphism(q, q, [&](const std::vector<std::size_t>& phi) {
    CHECK(verify_isomorphism(q, q, inverse(phi)));
    ++count;
    return true;
  });
  CHECK(count >= 2);

  const auto a = product(simplex(1), simplex(2));
  const auto b = product(simplex(2), simplex(1));
  const auto phi = is_combinatorially_isomorphic(a, b);
  REQUIRE(phi);
  CHECK(verify_isomorphism(b, a, inverse(*phi)));
}

TEST_CASE("orientation character of simplex symmetries") {
  const auto s = simplex(3);
  CHECK(isomorphism_orientation(s, s, identity(4)) == 1);
  // Swapping two facets is a transposition of coordinates.
  CHECK(isomorphism_orientation(s, s, {1, 0, 2, 3}) == -1);
  CHECK(isomorphism_orientation(s, s, {1, 2, 0, 3}) == 1);
}
