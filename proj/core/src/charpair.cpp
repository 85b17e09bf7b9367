#include "toric_cobordism/charpair.hpp"

#include <algorithm>
#include <numeric>

namespace tcob {

std::string to_string(Ring r) { return r == Ring::Z ? "Z" : "GF2"; }

Ring parse_ring(const std::string& text) {
  if (text == "Z" || text == "z") return Ring::Z;
  if (text == "GF2" || text == "gf2" || text == "z2" || text == "Z2") return Ring::GF2;
  throw std::invalid_argument("unknown ring '" + text + "' (expected Z or GF2)");
}

// ---------------------------------------------------------------------------
// CharacteristicFunction

CharacteristicFunction::CharacteristicFunction(Ring ring, std::size_t rank, std::size_t facet_count)
    : ring_(ring), rank_(rank), vectors_(facet_count), free_(facet_count, false) {}

void CharacteristicFunction::assign(std::size_t facet, IntVector v) {
  if (facet >= vectors_.size()) throw std::out_of_range("assign: unknown facet");
  if (v.size() != rank_) throw DimensionError("characteristic vector has length " + std::to_string(v.size()) +
                                              ", group rank is " + std::to_string(rank_));
  if (ring_ == Ring::GF2)
    for (auto& x : v) x = ((x % 2) + 2) % 2;
  vectors_[facet] = std::move(v);
  free_[facet] = false;
}

void CharacteristicFunction::set_free(std::size_t facet) {
  if (facet >= vectors_.size()) throw std::out_of_range("set_free: unknown facet");
  vectors_[facet].reset();
  free_[facet] = true;
}

bool CharacteristicFunction::is_free(std::size_t facet) const { return free_.at(facet); }

const IntVector& CharacteristicFunction::vector(std::size_t facet) const {
  const auto& v = vectors_.at(facet);
  if (!v) throw CharacteristicError("facet " + std::to_string(facet) + " carries no vector");
  return *v;
}

void CharacteristicFunction::require_complete() const {
  for (std::size_t f = 0; f < vectors_.size(); ++f)
    if (!vectors_[f] && !free_[f]) throw CharacteristicError("facet " + std::to_string(f) + " has no assignment");
}

bool CharacteristicFunction::same_class(const IntVector& a, const IntVector& b) const {
  if (a.size() != b.size()) return false;
  if (ring_ == Ring::GF2) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (((a[i] - b[i]) % 2) != 0) return false;
    return true;
  }
  if (a == b) return true;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != -b[i]) return false;
  return true;
}

CharacteristicFunction CharacteristicFunction::reduced_mod2() const {
  CharacteristicFunction out(Ring::GF2, rank_, vectors_.size());
  for (std::size_t f = 0; f < vectors_.size(); ++f) {
    if (free_[f]) out.set_free(f);
    if (vectors_[f]) out.assign(f, *vectors_[f]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Validity

namespace {

std::vector<std::string> tags_of(const SimplePolytope& p, FacetMask m) {
  std::vector<std::string> out;
  for (std::size_t f : facets_of(m)) out.push_back(p.facet_tag(f));
  return out;
}

void require_matching(const CharacteristicPair& pair) {
  if (pair.chi.facet_count() != pair.polytope.facet_count())
    throw CharacteristicError("characteristic function and polytope disagree on the number of facets");
  pair.chi.require_complete();
}

}  // namespace

ValidityReport validate(const CharacteristicPair& pair) {
  require_matching(pair);
  const auto& p = pair.polytope;
  const auto& chi = pair.chi;
  ValidityReport report;
  for (std::size_t v = 0; v < p.vertex_count(); ++v) {
    ++report.vertices_checked;
    const FacetMask m = p.vertex_facets(v);
    std::vector<IntVector> vecs;
    bool has_free = false;
    for (std::size_t f : facets_of(m)) {
      if (chi.is_free(f))
        has_free = true;
      else
        vecs.push_back(chi.vector(f));
    }
    std::string reason;
    if (vecs.size() > chi.rank()) {
      reason = "more vectors than the group rank";
    } else if (!has_free && vecs.size() != chi.rank()) {
      reason = "closed vertex carries " + std::to_string(vecs.size()) + " vectors, group rank " +
               std::to_string(chi.rank());
    } else if (chi.ring() == Ring::Z) {
      if (!is_direct_summand(vecs, chi.rank())) reason = "vectors do not span a direct summand";
    } else {
      if (Gf2Matrix::from_rows(vecs, chi.rank()).rank() != vecs.size()) reason = "vectors are dependent over GF(2)";
    }
    if (!reason.empty()) {
      report.valid = false;
      report.failures.push_back(VertexFailure{v, tags_of(p, m), reason});
    }
  }
  return report;
}

bool orientable_small_cover(const CharacteristicPair& pair) {
  if (pair.chi.ring() != Ring::GF2) throw CharacteristicError("orientable_small_cover needs a GF(2) pair");
  if (!validate(pair).valid) throw CharacteristicError("orientable_small_cover: invalid pair");
  std::vector<IntVector> rows;
  for (std::size_t f = 0; f < pair.chi.facet_count(); ++f)
    if (pair.chi.is_assigned(f)) rows.push_back(pair.chi.vector(f));
  Gf2Matrix a = Gf2Matrix::from_rows(rows, pair.chi.rank());
  return solve_gf2(a, Gf2Vector::ones(rows.size())).has_value();
}

CharacteristicPair restrict(const CharacteristicPair& pair, std::size_t facet) {
  require_matching(pair);
  CharacteristicPair out;
  out.polytope = facet_polytope(pair.polytope, facet);
  out.group_sign = pair.group_sign;
  out.chi = CharacteristicFunction(pair.chi.ring(), pair.chi.rank(), out.polytope.facet_count());
  for (std::size_t g = 0; g < out.polytope.facet_count(); ++g) {
    const std::size_t parent = pair.polytope.facet_id(out.polytope.facet_tag(g));
    if (pair.chi.is_free(parent))
      throw CharacteristicError("restriction meets the free facet " + out.polytope.facet_tag(g));
    out.chi.assign(g, pair.chi.vector(parent));
  }
  auto report = validate(out);
  if (!report.valid)
    throw CharacteristicError("restriction to " + pair.polytope.facet_tag(facet) + " is invalid at vertex " +
                              std::to_string(report.failures.front().vertex));
  return out;
}

CharacteristicPair standard_pair(StandardKind kind, std::size_t m, bool conjugate) {
  if (m < 1) throw std::invalid_argument("standard_pair: m must be >= 1");
  const bool complex = kind == StandardKind::ComplexProjective;
  if (!complex) conjugate = false;
  CharacteristicPair out;
  out.polytope = simplex(m);
  out.chi = CharacteristicFunction(complex ? Ring::Z : Ring::GF2, m, m + 1);
  out.chi.assign(0, IntVector(m, conjugate ? -1 : 1));
  for (std::size_t i = 1; i <= m; ++i) {
    IntVector e(m, 0);
    e[i - 1] = 1;
    out.chi.assign(i, std::move(e));
  }
  out.group_sign = conjugate ? -1 : 1;
  return out;
}

std::string standard_name(StandardKind kind, std::size_t m, bool conjugate) {
  if (kind == StandardKind::RealProjective) return "RP" + std::to_string(m);
  return (conjugate ? "conjugate CP" : "CP") + std::to_string(m);
}

// ---------------------------------------------------------------------------
// Translations

namespace {

IntVector apply_ring(const IntMatrix& d, const IntVector& x, Ring ring) {
  IntVector y = d.apply(x);
  if (ring == Ring::GF2)
    for (auto& v : y) v = ((v % 2) + 2) % 2;
  return y;
}

bool invertible(const IntMatrix& d, Ring ring) {
  if (d.rows() != d.cols()) return false;
  if (ring == Ring::Z) {
    Integer det = determinant(d);
    return det == 1 || det == -1;
  }
  Gf2Matrix g(d.rows(), d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) g.set(i, j, static_cast<bool>(d(i, j) % 2 != 0));
  return g.rank() == d.rows();
}

// Columns are the given vectors.
IntMatrix column_matrix(const std::vector<IntVector>& cols, std::size_t rank) {
  IntMatrix m(rank, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rank; ++i) m(i, j) = cols[j][i];
  return m;
}

std::optional<IntMatrix> inverse_z(const IntMatrix& b) {
  const std::size_t n = b.rows();
  IntMatrix inv(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    RationalMatrix a(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(b(i, j));
    RationalVector rhs(n, Rational(0));
    rhs[c] = 1;
    auto x = solve_unique(std::move(a), std::move(rhs));
    if (!x) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) {
      if (denominator((*x)[i]) != 1) return std::nullopt;
      inv(i, c) = numerator((*x)[i]);
    }
  }
  return inv;
}

std::optional<IntMatrix> inverse_gf2(const IntMatrix& b) {
  const std::size_t n = b.rows();
  Gf2Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.set(i, j, b(i, j) % 2 != 0);
  IntMatrix inv(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    Gf2Vector e(n);
    e.set(c, true);
    auto x = solve_gf2(g, e);
    if (!x) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) inv(i, c) = x->get(i) ? 1 : 0;
  }
  return inv;
}

void reduce_mod2(IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Integer r = m(i, j) % 2;
      m(i, j) = r < 0 ? Integer(r + 2) : r;
    }
}

// A vertex of the pair whose facets all carry vectors forming a basis.
std::optional<std::size_t> basis_vertex(const CharacteristicPair& pair) {
  for (std::size_t v = 0; v < pair.polytope.vertex_count(); ++v) {
    auto fs = facets_of(pair.polytope.vertex_facets(v));
    if (fs.size() != pair.chi.rank()) continue;
    if (std::all_of(fs.begin(), fs.end(), [&](std::size_t f) { return pair.chi.is_assigned(f); })) return v;
  }
  return std::nullopt;
}

}  // namespace

DeltaTranslation compose(const DeltaTranslation& first, const DeltaTranslation& second, Ring ring) {
  if (first.phi.size() != second.phi.size()) throw DimensionError("compose: facet counts differ");
  DeltaTranslation out;
  out.phi.resize(first.phi.size());
  for (std::size_t i = 0; i < first.phi.size(); ++i) out.phi[i] = second.phi.at(first.phi[i]);
  out.delta = second.delta * first.delta;
  if (ring == Ring::GF2) reduce_mod2(out.delta);
  return out;
}

bool verify_delta_translation(const CharacteristicPair& a, const CharacteristicPair& b, const DeltaTranslation& t) {
  if (a.chi.ring() != b.chi.ring()) throw CharacteristicError("verify_delta_translation: ring mismatch");
  require_matching(a);
  require_matching(b);
  if (a.chi.rank() != b.chi.rank()) return false;
  if (t.delta.rows() != a.chi.rank() || t.delta.cols() != a.chi.rank()) return false;
  if (!verify_isomorphism(a.polytope, b.polytope, t.phi)) return false;
  if (!invertible(t.delta, a.chi.ring())) return false;
  for (std::size_t f = 0; f < a.chi.facet_count(); ++f) {
    const std::size_t g = t.phi[f];
    if (a.chi.is_free(f) != b.chi.is_free(g)) return false;
    if (a.chi.is_free(f)) continue;
    if (!b.chi.same_class(apply_ring(t.delta, a.chi.vector(f), a.chi.ring()), b.chi.vector(g))) return false;
  }
  return true;
}

namespace {

std::vector<DeltaTranslation> search_translations(const CharacteristicPair& a, const CharacteristicPair& b,
                                                  std::size_t max_trials, std::size_t max_results) {
  if (a.chi.ring() != b.chi.ring()) throw CharacteristicError("find_delta_translation: ring mismatch");
  require_matching(a);
  require_matching(b);
  std::vector<DeltaTranslation> found;
  if (a.chi.rank() != b.chi.rank()) return found;
  const Ring ring = a.chi.ring();
  const std::size_t r = a.chi.rank();
  const auto v0 = basis_vertex(a);
  if (!v0) throw CharacteristicError("find_delta_translation: source pair has no vertex with a full basis");
  const auto fs = facets_of(a.polytope.vertex_facets(*v0));
  std::vector<IntVector> src;
  for (std::size_t f : fs) src.push_back(a.chi.vector(f));
  const IntMatrix bm = column_matrix(src, r);
  const auto binv = ring == Ring::Z ? inverse_z(bm) : inverse_gf2(bm);
  if (!binv) throw CharacteristicError("find_delta_translation: vertex vectors are not a basis");

  const std::size_t sign_choices = ring == Ring::Z ? (std::size_t{1} << r) : 1;
  std::size_t trials = 0;
  for_each_isomorphism(a.polytope, b.polytope, [&](const std::vector<std::size_t>& phi) {
    std::vector<IntVector> dst;
    for (std::size_t f : fs) {
      if (!b.chi.is_assigned(phi[f])) return true;
      dst.push_back(b.chi.vector(phi[f]));
    }
    for (std::size_t s = 0; s < sign_choices; ++s) {
      if (++trials > max_trials)
        throw SearchCapExceeded("delta-translation search exceeded " + std::to_string(max_trials) + " candidates");
      std::vector<IntVector> signed_dst = dst;
      for (std::size_t i = 0; i < r; ++i)
        if ((s >> i) & 1u)
          for (auto& x : signed_dst[i]) x = -x;
      IntMatrix delta = column_matrix(signed_dst, r) * *binv;
      if (ring == Ring::GF2) reduce_mod2(delta);
      DeltaTranslation t{phi, std::move(delta)};
      if (verify_delta_translation(a, b, t)) {
        found.push_back(std::move(t));
        if (found.size() >= max_results) return false;
      }
    }
    return true;
  });
  return found;
}

}  // namespace

std::vector<DeltaTranslation> find_all_delta_translations(const CharacteristicPair& a, const CharacteristicPair& b,
                                                          std::size_t max_trials) {
  return search_translations(a, b, max_trials, static_cast<std::size_t>(-1));
}

std::optional<DeltaTranslation> find_delta_translation(const CharacteristicPair& a, const CharacteristicPair& b,
                                                       std::size_t max_trials) {
  auto all = search_translations(a, b, max_trials, 1);
  if (all.empty()) return std::nullopt;
  return all.front();
}

int orientation_effect(const CharacteristicPair& a, const CharacteristicPair& b, const DeltaTranslation& t) {
  if (a.chi.ring() != Ring::Z || b.chi.ring() != Ring::Z)
    throw CharacteristicError("orientation_effect is defined for Z pairs");
  const int d = det_sign(t.delta);
  if (d == 0) throw CharacteristicError("orientation_effect: singular delta");
  return d * isomorphism_orientation(a.polytope, b.polytope, t.phi) * a.group_sign * b.group_sign;
}

int small_cover_orientation_effect(const CharacteristicPair& a, const CharacteristicPair& b,
                                   const DeltaTranslation& t) {
  return isomorphism_orientation(a.polytope, b.polytope, t.phi);
}

Gf2Subspace isotropy_gf2(const CharacteristicFunction& chi, FacetMask facets) {
  Gf2Subspace s(chi.rank());
  for (std::size_t f : facets_of(facets))
    if (chi.is_assigned(f)) s.insert(Gf2Vector::from_ints(chi.vector(f)));
  return s;
}

}  // namespace tcob
