#include "toric_cobordism/family.hpp"

#include <algorithm>

namespace tcob {

namespace {

void require_even_n(std::size_t n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("n must be even and >= 4, got " + std::to_string(n));
}

std::size_t d_label(const std::string& tag) {
  if (tag.size() < 2 || tag[0] != 'D') throw ConstructionError("not an original facet: " + tag);
  return static_cast<std::size_t>(std::stoul(tag.substr(1)));
}

}  // namespace

std::vector<IntVector> xi(std::size_t n) {
  require_even_n(n);
  const std::size_t half = n / 2;
  std::vector<IntVector> out;
  // Places are 1-based: place p is entry p-1.
  for (std::size_t j = 0; j <= n; ++j) {
    IntVector v(n - 1, 0);
    if (j + 1 < half) {
      v[j] = 1;
    } else if (j + 1 == half) {
      for (std::size_t p = 1; p <= half; ++p) v[p - 1] = 1;
    } else if (j < n) {
      v[j - 1] = 1;
    } else {
      for (std::size_t p = half; p <= n - 1; ++p) v[p - 1] = 1;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<IntVector> mu(std::size_t n) {
  auto v = xi(n);
  for (auto& x : v)
    for (auto& e : x) e = ((e % 2) + 2) % 2;
  return v;
}

CharacteristicFunction xi_function(std::size_t n) {
  const auto x = xi(n);
  CharacteristicFunction chi(Ring::Z, n - 1, n + 1);
  for (std::size_t a = 0; a <= n; ++a) chi.assign(a, x[xi_index_of_facet(n, a)]);
  return chi;
}

CharacteristicFunction mu_function(std::size_t n) { return xi_function(n).reduced_mod2(); }

std::vector<std::size_t> rho(std::size_t n) {
  require_even_n(n);
  const std::size_t half = n / 2;
  std::vector<std::size_t> r(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    if (j + 1 < half || (j > half && j < n))
      r[j] = n - 1 - j;
    else if (j + 1 == half)
      r[j] = n;
    else if (j == half)
      r[j] = half;
    else
      r[j] = half - 1;
  }
  return r;
}

std::vector<std::size_t> phi_permutation(std::size_t n) {
  const auto r = rho(n);
  std::vector<std::size_t> p(n + 1);
  for (std::size_t a = 0; a <= n; ++a) p[a] = n - r[n - a];
  return p;
}

IntMatrix h_matrix(std::size_t n) {
  require_even_n(n);
  const std::size_t m = n - 1;
  IntMatrix h(m, m);
  // Column i-1 is the image of alpha_i, namely alpha_{n-i}.
  for (std::size_t i = 1; i <= m; ++i) h(n - i - 1, i - 1) = 1;
  return h;
}

IntMatrix f_matrix(std::size_t n) {
  require_even_n(n);
  IntMatrix f = IntMatrix::identity(n - 1);
  f(0, 0) = -1;
  return f;
}

IntMatrix hs_matrix(std::size_t n) { return h_matrix(n); }

std::vector<std::size_t> phi_facet_bijection(const SimplePolytope& p1, const SimplePolytope& p2,
                                             const std::vector<std::size_t>& label_perm) {
  std::vector<std::size_t> phi(p1.facet_count());
  for (std::size_t f = 0; f < p1.facet_count(); ++f) {
    const std::size_t a = d_label(p1.facet_tag(f));
    if (a >= label_perm.size()) throw ConstructionError("facet label out of range: " + p1.facet_tag(f));
    phi[f] = p2.facet_id("D" + std::to_string(label_perm[a]));
  }
  return phi;
}

FamilyDescriptor build_family(std::size_t k, Ring ring, const Rational& r1, const Rational& r2) {
  const std::size_t n = 2 * k;
  require_even_n(n);
  FamilyDescriptor fam;
  fam.k = k;
  fam.n = n;
  fam.ring = ring;
  fam.r1 = r1;
  fam.r2 = r2;

  SimplePolytope q = build_delta_Q(n, r1, r2);
  const auto x = ring == Ring::Z ? xi(n) : mu(n);
  CharacteristicFunction chi(ring, n - 1, q.facet_count());
  for (std::size_t f = 0; f < q.facet_count(); ++f) {
    const std::string& tag = q.facet_tag(f);
    if (tag[0] == 'P')
      chi.set_free(f);
    else
      chi.assign(f, x[xi_index_of_facet(n, d_label(tag))]);
  }
  fam.cut_facets = {q.facet_id("P1"), q.facet_id("P2"), q.facet_id("P3")};
  fam.full = CharacteristicPair{std::move(q), std::move(chi), 1};

  auto report = validate(fam.full);
  if (!report.valid)
    throw ConstructionError("characteristic function fails at vertex " +
                            std::to_string(report.failures.front().vertex));
  const FacetMask cuts =
      facet_bit(fam.cut_facets[0]) | facet_bit(fam.cut_facets[1]) | facet_bit(fam.cut_facets[2]);
  for (FacetMask m : fam.full.polytope.all_vertex_facets())
    if (popcount(m & cuts) > 1) throw ConstructionError("boundary facets are not disjoint");

  for (std::size_t i = 0; i < 3; ++i) fam.boundary[i] = restrict(fam.full, fam.cut_facets[i]);

  fam.rho = rho(n);
  fam.phi_permutation = phi_permutation(n);
  fam.phi = phi_facet_bijection(fam.boundary[0].polytope, fam.boundary[1].polytope, fam.phi_permutation);
  if (!verify_isomorphism(fam.boundary[0].polytope, fam.boundary[1].polytope, fam.phi))
    throw ConstructionError("Phi does not map P1 onto P2");
  fam.h = h_matrix(n);
  fam.f = f_matrix(n);
  fam.hs = hs_matrix(n);
  return fam;
}

DeltaTranslation gluing_translation(const FamilyDescriptor& fam, const IntMatrix& delta) {
  return DeltaTranslation{fam.phi, delta};
}

ReflectionCount reflection_count(std::size_t n) {
  const auto m = mu(n);
  const std::size_t half = n / 2;
  std::vector<std::size_t> basis_idx;
  for (std::size_t j = 0; j <= n; ++j)
    if (j + 1 != half && j != n) basis_idx.push_back(j);
  Gf2Matrix a(n - 1, basis_idx.size());
  for (std::size_t c = 0; c < basis_idx.size(); ++c)
    for (std::size_t i = 0; i < n - 1; ++i) a.set(i, c, m[basis_idx[c]][i] != 0);

  auto expand = [&](std::size_t j) {
    auto x = solve_gf2(a, Gf2Vector::from_ints(m[j]));
    if (!x) throw ConstructionError("mu_" + std::to_string(j) + " is not in the span of the nonzero mu~");
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < basis_idx.size(); ++c)
      if (x->get(c)) support.push_back(basis_idx[c]);
    return support;
  };
  ReflectionCount rc;
  rc.support_lower = expand(half - 1);
  rc.support_top = expand(n);
  if (rc.support_lower.size() != half || rc.support_top.size() != half)
    throw ConstructionError("reflection count differs from n/2: " + std::to_string(rc.support_lower.size()) +
                            " and " + std::to_string(rc.support_top.size()));
  rc.count = half;
  // The top cell's two attaching pieces differ by `count` reflections.
  rc.d_n = 1 + (rc.count % 2 == 0 ? 1 : -1);
  return rc;
}

}  // namespace tcob
