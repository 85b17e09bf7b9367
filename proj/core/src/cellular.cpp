#include "toric_cobordism/cellular.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <unordered_map>

namespace tcob {

// ---------------------------------------------------------------------------
// Linear functionals and indices

Rational evaluate(const LinearFunctional& l, const RationalVector& x) {
  if (x.size() != l.coefficients.size()) throw DimensionError("functional and point differ in length");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * l.coefficients[i];
  return s;
}

bool distinguishes_vertices(const SimplePolytope& p, const LinearFunctional& l) {
  std::vector<Rational> values;
  for (const auto& x : p.coordinates()) values.push_back(evaluate(l, x));
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

namespace {

constexpr std::int64_t kCoefficientBound = 1000000;

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(rng() % span);
}

}  // namespace

LinearFunctional random_functional(const SimplePolytope& p, std::uint64_t seed) {
  const std::size_t ambient = p.coordinates().at(0).size();
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    LinearFunctional l{IntVector(ambient), seed, "random"};
    for (auto& c : l.coefficients) c = draw(rng, -kCoefficientBound, kCoefficientBound);
    if (distinguishes_vertices(p, l)) return l;
  }
  throw TieError("no generic functional found in 1000 draws");
}

LinearFunctional anchored_functional(const SimplePolytope& p, std::uint64_t seed) {
  const std::size_t ambient = p.coordinates().at(0).size();
  const std::size_t n = ambient - 1;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    LinearFunctional l{IntVector(ambient), seed, "anchored"};
    std::set<std::int64_t> used;
    for (auto& c : l.coefficients) {
      std::int64_t v;
      do v = draw(rng, 0, kCoefficientBound - 1);
      while (!used.insert(v).second);
      c = v;
    }
    l.coefficients[n / 2 + 1] = 3 * kCoefficientBound;
    l.coefficients[0] = 2 * kCoefficientBound;
    if (distinguishes_vertices(p, l)) return l;
  }
  throw TieError("no generic functional found in 1000 draws");
}

std::vector<std::size_t> IndexProfile::sizes() const {
  std::vector<std::size_t> s;
  for (const auto& x : I) s.push_back(x.size());
  return s;
}

FacetMask cut_facet_mask(const SimplePolytope& p) {
  FacetMask m = 0;
  for (std::size_t f = 0; f < p.facet_count(); ++f)
    if (!p.facet_tag(f).empty() && p.facet_tag(f)[0] == 'P') m |= facet_bit(f);
  return m;
}

IndexProfile vertex_indices(const SimplePolytope& p, const LinearFunctional& l, FacetMask cut_facets, bool strict) {
  if (!distinguishes_vertices(p, l)) throw TieError("functional does not distinguish the vertices");
  std::vector<Rational> value;
  for (const auto& x : p.coordinates()) value.push_back(evaluate(l, x));
  const auto edges = p.edges();
  IndexProfile prof;
  prof.index.assign(p.vertex_count(), 0);
  prof.edge_old.resize(edges.size());
  prof.I.assign(p.dim() + 1, {});
  prof.index_counts.assign(p.dim() + 1, 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& ed = edges[e];
    prof.edge_old[e] = (ed.facets & cut_facets) == 0;
    const std::size_t head = value[ed.a] > value[ed.b] ? ed.a : ed.b;
    ++prof.index[head];
  }
  for (std::size_t v = 0; v < p.vertex_count(); ++v) ++prof.index_counts[prof.index[v]];
  std::vector<std::size_t> contributed(p.vertex_count(), 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!prof.edge_old[e]) continue;
    const auto& ed = edges[e];
    const std::size_t head = value[ed.a] > value[ed.b] ? ed.a : ed.b;
    const std::size_t j = prof.index[head];
    if (j == 0) continue;
    prof.I[j].push_back(IndexPair{head, e});
    if (++contributed[head] > 1 && strict)
      throw std::logic_error("vertex " + std::to_string(head) + " has two inward old edges");
  }
  return prof;
}

HomologyTable homology_W_rel_boundary(const FamilyDescriptor& fam, const LinearFunctional& l,
                                      IndexProfile* profile) {
  if (fam.ring != Ring::Z) throw std::invalid_argument("homology_W_rel_boundary needs the Z family");
  const auto& p = fam.full.polytope;
  IndexProfile prof = vertex_indices(p, l, cut_facet_mask(p), true);
  const std::size_t n = fam.n;
  HomologyTable table;
  for (std::size_t d = 0; d <= 2 * n - 1; ++d) table.push_back(HomologyGroup{d, 0, {}});
  table[0].betti = 1;
  for (std::size_t j = 1; j <= n; ++j) table[2 * j - 1].betti = prof.I[j].size();
  if (profile) *profile = std::move(prof);
  return table;
}

// ---------------------------------------------------------------------------
// Quotient complex

namespace {

std::uint64_t pack(const Gf2Vector& v) {
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v.get(i)) x |= std::uint64_t{1} << i;
  return x;
}

struct FaceGeometry {
  std::vector<RationalVector> frame;
  RationalVector center;
};

FaceGeometry face_geometry(const SimplePolytope& p, const Face& f) {
  std::vector<RationalVector> pts;
  for (std::size_t v : f.vertices) pts.push_back(p.coordinates()[v]);
  std::vector<std::size_t> all(pts.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  FaceGeometry g;
  g.center = centroid(pts, all);
  if (f.dim > 0) g.frame = canonical_frame(pts, f.dim);
  return g;
}

RationalVector minus(const RationalVector& a, const RationalVector& b) {
  RationalVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

}  // namespace

QuotientCWComplex build_quotient_complex(const CharacteristicPair& pair, FacetMask excluded) {
  if (pair.chi.ring() != Ring::GF2) throw CharacteristicError("quotient complexes need a GF(2) pair");
  if (pair.chi.rank() > 62) throw DimensionError("group rank too large for the oracle");
  if (!validate(pair).valid) throw CharacteristicError("build_quotient_complex: invalid pair");
  const auto& p = pair.polytope;
  QuotientCWComplex c;
  c.dim = p.dim();
  c.group_rank = pair.chi.rank();
  c.faces = p.faces();
  c.face_kept.resize(c.faces.size());
  c.cells.assign(c.dim + 1, {});
  c.boundary.assign(c.dim + 1, {});

  std::unordered_map<FacetMask, std::size_t> face_of;
  for (std::size_t i = 0; i < c.faces.size(); ++i) face_of[c.faces[i].facets] = i;

  std::vector<Gf2Subspace> iso;
  std::vector<FaceGeometry> geom(c.faces.size());
  // cell_index[face][packed rep] = index within its dimension
  std::vector<std::unordered_map<std::uint64_t, std::size_t>> cell_index(c.faces.size());
  for (std::size_t i = 0; i < c.faces.size(); ++i) {
    const Face& f = c.faces[i];
    c.face_kept[i] = (f.facets & excluded) == 0;
    iso.push_back(isotropy_gf2(pair.chi, f.facets));
    if (!c.face_kept[i]) continue;
    geom[i] = face_geometry(p, f);
    for (auto& rep : iso.back().coset_representatives()) {
      cell_index[i][pack(rep)] = c.cells[f.dim].size();
      c.cells[f.dim].push_back(QuotientCell{i, std::move(rep)});
    }
  }

  for (std::size_t d = 1; d <= c.dim; ++d) {
    c.boundary[d].resize(c.cells[d].size());
    // Incidence signs depend only on the faces; compute once per face pair.
    std::map<std::pair<std::size_t, std::size_t>, int> sign_cache;
    for (std::size_t k = 0; k < c.cells[d].size(); ++k) {
      const QuotientCell& cell = c.cells[d][k];
      const Face& f = c.faces[cell.face];
      for (std::size_t facet = 0; facet < p.facet_count(); ++facet) {
        if (f.facets & facet_bit(facet)) continue;
        auto it = face_of.find(f.facets | facet_bit(facet));
        if (it == face_of.end() || !c.face_kept[it->second]) continue;
        const std::size_t g = it->second;
        auto key = std::make_pair(cell.face, g);
        auto sc = sign_cache.find(key);
        int sign;
        if (sc == sign_cache.end()) {
          std::vector<RationalVector> test{minus(geom[g].center, geom[cell.face].center)};
          test.insert(test.end(), geom[g].frame.begin(), geom[g].frame.end());
          sign = orientation_sign(geom[cell.face].frame, test);
          if (sign == 0) throw ChainComplexError("degenerate face incidence");
          sign_cache.emplace(key, sign);
        } else {
          sign = sc->second;
        }
        const Gf2Vector rep = iso[g].reduce(cell.coset_rep);
        c.boundary[d][k].emplace_back(cell_index[g].at(pack(rep)), sign);
      }
    }
  }
  return c;
}

ChainComplex chain_complex(const QuotientCWComplex& c, Ring ring) {
  ChainComplex cc;
  cc.ring = ring;
  for (const auto& cells : c.cells) cc.ranks.push_back(cells.size());
  cc.boundary.emplace_back(0, cc.ranks.empty() ? 0 : cc.ranks[0]);
  for (std::size_t d = 1; d < cc.ranks.size(); ++d) {
    SparseIntMatrix m(cc.ranks[d - 1], cc.ranks[d]);
    for (std::size_t k = 0; k < c.boundary[d].size(); ++k)
      for (const auto& [row, sign] : c.boundary[d][k]) m.add(row, k, ring == Ring::GF2 ? 1 : sign);
    cc.boundary.push_back(std::move(m));
  }
  if (!boundary_squares_to_zero(cc)) throw ChainComplexError("boundary of boundary is not zero");
  return cc;
}

bool boundary_squares_to_zero(const ChainComplex& c) {
  for (std::size_t d = 2; d < c.boundary.size(); ++d) {
    SparseIntMatrix prod = c.boundary[d - 1].multiply(c.boundary[d]);
    for (std::size_t col = 0; col < prod.cols(); ++col)
      for (const auto& e : prod.column(col)) {
        if (c.ring == Ring::GF2 ? (e.value % 2 != 0) : (e.value != 0)) return false;
      }
  }
  return true;
}

HomologyTable homology(const ChainComplex& c) {
  const std::size_t top = c.ranks.size();
  std::vector<std::size_t> rank(top + 1, 0);
  std::vector<std::vector<Integer>> torsion(top + 1);
  for (std::size_t d = 1; d < top; ++d) {
    if (c.ring == Ring::GF2) {
      rank[d] = c.boundary[d].rank_gf2();
    } else {
      auto factors = c.boundary[d].invariant_factors();
      rank[d] = factors.size();
      for (auto& x : factors)
        if (x > 1) torsion[d].push_back(x);
    }
  }
  HomologyTable table;
  for (std::size_t d = 0; d < top; ++d) {
    HomologyGroup g;
    g.degree = d;
    g.betti = c.ranks[d] - rank[d] - rank[d + 1];
    g.torsion = torsion[d + 1];
    table.push_back(std::move(g));
  }
  return table;
}

long long euler_characteristic(const ChainComplex& c) {
  long long chi = 0;
  for (std::size_t d = 0; d < c.ranks.size(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(c.ranks[d]);
  return chi;
}

long long euler_characteristic(const HomologyTable& h) {
  long long chi = 0;
  for (const auto& g : h) chi += (g.degree % 2 == 0 ? 1 : -1) * static_cast<long long>(g.betti);
  return chi;
}

namespace {

CharacteristicPair gf2_pair(const FamilyDescriptor& fam) {
  CharacteristicPair p = fam.full;
  if (fam.ring == Ring::Z) p.chi = p.chi.reduced_mod2();
  return p;
}

}  // namespace

EulerCrossCheck euler_cross_check(const FamilyDescriptor& fam, const LinearFunctional& l) {
  const auto pair = gf2_pair(fam);
  const FacetMask cuts = cut_facet_mask(pair.polytope);
  // Cell counts alone decide chi; no incidences needed.
  EulerCrossCheck out;
  for (const auto& f : pair.polytope.faces()) {
    if (f.facets & cuts) continue;
    const long long cells = 1LL << (pair.chi.rank() - isotropy_gf2(pair.chi, f.facets).dimension());
    out.complex_side += (f.dim % 2 == 0 ? 1 : -1) * cells;
  }
  const auto prof = vertex_indices(pair.polytope, l, cuts, true);
  for (std::size_t j = 1; j < prof.I.size(); ++j)
    out.index_side += (j % 2 == 0 ? 1 : -1) * static_cast<long long>(prof.I[j].size());
  out.agree = out.complex_side == out.index_side;
  return out;
}

OrientabilityVerdict is_orientable_space(const FamilyDescriptor& fam, std::size_t oracle_max_n) {
  if (fam.ring != Ring::GF2) throw std::invalid_argument("is_orientable_space needs the GF(2) family");
  OrientabilityVerdict v;
  v.parity_formula = fam.n % 4 == 2;
  v.d_n = reflection_count(fam.n).d_n;
  v.orientable = v.parity_formula;
  if (fam.n <= oracle_max_n) {
    auto qc = build_quotient_complex(fam.full, cut_facet_mask(fam.full.polytope));
    auto h = homology(chain_complex(qc, Ring::Z));
    const auto& top = h.at(fam.n);
    v.oracle_used = true;
    v.orientable = top.betti == 1 && top.torsion.empty();
    v.oracle = std::move(h);
  }
  if (v.orientable != v.parity_formula || v.orientable != (v.d_n == 0))
    throw ChainComplexError("orientability verdicts disagree (oracle/parity/d_n)");
  return v;
}

int gluing_orientation_oracle(const FamilyDescriptor& fam) {
  if (fam.n % 4 != 2) throw std::invalid_argument("gluing oracle needs n = 4l+2");
  if (fam.n > kOracleMaxN) throw std::invalid_argument("gluing oracle is limited to n <= 6");
  const auto pair = gf2_pair(fam);
  const auto& p = pair.polytope;
  const FacetMask cuts = cut_facet_mask(p);
  const auto qc = build_quotient_complex(pair, 0);
  const std::size_t n = fam.n;

  // Relative fundamental cycle: kernel of the top boundary modulo cells in dS.
  const auto& top = qc.cells[n];
  const auto& low = qc.cells[n - 1];
  RationalMatrix rel;
  std::vector<std::size_t> rel_rows;
  for (std::size_t r = 0; r < low.size(); ++r)
    if ((qc.faces[low[r].face].facets & cuts) == 0) rel_rows.push_back(r);
  std::unordered_map<std::size_t, std::size_t> rel_pos;
  for (std::size_t i = 0; i < rel_rows.size(); ++i) rel_pos[rel_rows[i]] = i;
  rel.assign(rel_rows.size(), RationalVector(top.size(), Rational(0)));
  for (std::size_t k = 0; k < top.size(); ++k)
    for (const auto& [row, sign] : qc.boundary[n][k]) {
      auto it = rel_pos.find(row);
      if (it != rel_pos.end()) rel[it->second][k] += sign;
    }
  auto ker = null_space(rel, top.size());
  if (ker.size() != 1) throw ChainComplexError("relative top homology is not rank one");
  // Scale to a primitive integer vector.
  Integer lcm = 1;
  for (const auto& x : ker[0]) lcm = boost::multiprecision::lcm(lcm, Integer(denominator(x)));
  std::vector<Integer> z;
  for (const auto& x : ker[0]) z.push_back(Integer(numerator(x)) * (lcm / denominator(x)));

  // Coefficients of dz on the top cells of the two glued boundary pieces.
  const std::size_t p1 = fam.cut_facets[0], p2 = fam.cut_facets[1];
  std::unordered_map<std::uint64_t, Integer> a, b;
  std::size_t face_p1 = 0, face_p2 = 0;
  for (std::size_t k = 0; k < top.size(); ++k)
    for (const auto& [row, sign] : qc.boundary[n][k]) {
      const auto& cell = low[row];
      const FacetMask m = qc.faces[cell.face].facets;
      if (m == facet_bit(p1)) {
        a[pack(cell.coset_rep)] += z[k] * sign;
        face_p1 = cell.face;
      } else if (m == facet_bit(p2)) {
        b[pack(cell.coset_rep)] += z[k] * sign;
        face_p2 = cell.face;
      }
    }

  // Orientation character of the coordinate permutation on the two cells.
  const auto perm = fam.phi_permutation;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[perm[i]] != i) throw ChainComplexError("Phi is not an involution");
  const auto g1 = face_geometry(p, qc.faces[face_p1]);
  const auto g2 = face_geometry(p, qc.faces[face_p2]);
  std::vector<RationalVector> image;
  for (const auto& v : g1.frame) {
    RationalVector w(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) w[j] = v[perm[j]];
    image.push_back(std::move(w));
  }
  const int s = orientation_sign(g2.frame, image);
  if (s == 0) throw ChainComplexError("Phi does not map P1 onto P2");

  std::optional<int> effect;
  const std::size_t r = pair.chi.rank();
  for (std::uint64_t g = 0; g < (std::uint64_t{1} << r); ++g) {
    IntVector gv(r);
    for (std::size_t i = 0; i < r; ++i) gv[i] = (g >> i) & 1u;
    IntVector hg = fam.hs.apply(gv);
    std::uint64_t hp = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (hg[i] % 2 != 0) hp |= std::uint64_t{1} << i;
    const Integer ag = a.count(g) ? a.at(g) : Integer(0);
    const Integer bg = b.count(hp) ? b.at(hp) : Integer(0);
    if (abs(ag) != 1 || abs(bg) != 1) throw ChainComplexError("boundary of the fundamental cycle is not unimodular");
    const int e = static_cast<int>(ag * bg) * s;
    if (effect && *effect != e) throw ChainComplexError("gluing has no constant orientation character");
    effect = e;
  }
  return *effect;
}

}  // namespace tcob
