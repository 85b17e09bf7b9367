#include "toric_cobordism/polytope.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace tcob {

int popcount(FacetMask m) { return std::popcount(m); }

std::vector<std::size_t> facets_of(FacetMask m) {
  std::vector<std::size_t> out;
  while (m != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

namespace {

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) acc += a[i] * b[i];
  return acc;
}

RationalVector minus(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// Calls f on every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Independent subset of the equality rows, plus consistency check.
std::vector<Hyperplane> independent_equalities(const HalfspaceSystem& s) {
  std::vector<Hyperplane> kept;
  RationalMatrix rows;
  for (const auto& eq : s.equalities) {
    if (eq.normal.size() != s.ambient_dim) throw DimensionError("equality normal has wrong length");
    RationalVector aug = eq.normal;
    aug.push_back(eq.offset);
    RationalMatrix with_normal = rows;
    with_normal.push_back(eq.normal);
    for (auto& r : with_normal) r.resize(s.ambient_dim);
    RationalMatrix aug_rows;
    for (const auto& k : kept) {
      RationalVector v = k.normal;
      v.push_back(k.offset);
      aug_rows.push_back(v);
    }
    aug_rows.push_back(aug);
    const std::size_t plain = rank(with_normal);
    if (plain == kept.size()) {
      // Dependent normal: the offset must agree, else the system is empty.
      if (rank(aug_rows) > plain) throw EmptySystem("inconsistent equality constraints");
      continue;
    }
    kept.push_back(eq);
    rows.push_back(eq.normal);
  }
  return kept;
}

}  // namespace

std::vector<EnumeratedVertex> enumerate_vertices(const HalfspaceSystem& s) {
  const std::size_t n = s.ambient_dim;
  for (const auto& h : s.inequalities)
    if (h.normal.size() != n) throw DimensionError("inequality normal has wrong length");
  const auto eqs = independent_equalities(s);
  const std::size_t d = n - eqs.size();
  const std::size_t m = s.inequalities.size();

  RationalMatrix all_rows;
  for (const auto& e : eqs) all_rows.push_back(e.normal);
  for (const auto& h : s.inequalities) all_rows.push_back(h.normal);
  const bool pointed = rank(all_rows) == n;

  std::vector<EnumeratedVertex> vertices;
  for_each_subset(m, d, [&](const std::vector<std::size_t>& sub) {
    RationalMatrix a;
    RationalVector b;
    for (const auto& e : eqs) {
      a.push_back(e.normal);
      b.push_back(e.offset);
    }
    for (std::size_t i : sub) {
      a.push_back(s.inequalities[i].normal);
      b.push_back(s.inequalities[i].offset);
    }
    auto x = solve_unique(std::move(a), std::move(b));
    if (!x) return;
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < m; ++i) {
      Rational lhs = dot(s.inequalities[i].normal, *x);
      if (lhs < s.inequalities[i].offset) return;
      if (lhs == s.inequalities[i].offset) tight.push_back(i);
    }
    for (const auto& v : vertices)
      if (v.point == *x) return;
    vertices.push_back(EnumeratedVertex{std::move(*x), std::move(tight)});
  });

  if (!pointed) {
    if (vertices.empty()) throw UnboundedSystem("system has a lineality space");
    throw UnboundedSystem("system has a lineality space");
  }
  if (vertices.empty()) throw EmptySystem("no feasible vertex");

  // Bounded iff no extreme ray: a direction fixed by d-1 tight inequalities
  // that every inequality weakly increases along.
  if (d >= 1) {
    for_each_subset(m, d - 1, [&](const std::vector<std::size_t>& sub) {
      RationalMatrix a;
      for (const auto& e : eqs) a.push_back(e.normal);
      for (std::size_t i : sub) a.push_back(s.inequalities[i].normal);
      auto ns = a.empty() ? std::vector<RationalVector>{} : null_space(a, n);
      if (a.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
          RationalVector e(n, Rational(0));
          e[i] = 1;
          ns.push_back(e);
        }
      }
      if (ns.size() != 1) return;
      bool all_pos = true, all_neg = true;
      for (const auto& h : s.inequalities) {
        Rational t = dot(h.normal, ns[0]);
        if (t < 0) all_pos = false;
        if (t > 0) all_neg = false;
      }
      if (all_pos || all_neg) throw UnboundedSystem("system has an extreme ray");
    });
  }
  return vertices;
}

// ---------------------------------------------------------------------------
// SimplePolytope

SimplePolytope::SimplePolytope(std::size_t dim, std::vector<std::string> facet_tags,
                               std::vector<FacetMask> vertex_facets)
    : dim_(dim), tags_(std::move(facet_tags)), vertex_facets_(std::move(vertex_facets)) {
  if (tags_.size() > kMaxFacets) throw PolytopeError("more than 64 facets");
  const FacetMask all = tags_.size() == 64 ? ~FacetMask{0} : facet_bit(tags_.size()) - 1;
  std::vector<FacetMask> sorted = vertex_facets_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PolytopeError("two vertices with the same facet set");
  for (std::size_t v = 0; v < vertex_facets_.size(); ++v) {
    FacetMask m = vertex_facets_[v];
    if ((m & ~all) != 0) throw PolytopeError("vertex references an unknown facet");
    if (static_cast<std::size_t>(popcount(m)) != dim_)
      throw PolytopeError("vertex " + std::to_string(v) + " lies on " + std::to_string(popcount(m)) +
                          " facets, polytope of dimension " + std::to_string(dim_) + " is not simple");
  }
  for (std::size_t f = 0; f < tags_.size(); ++f) {
    std::size_t c = 0;
    for (FacetMask m : vertex_facets_)
      if (m & facet_bit(f)) ++c;
    if (c < dim_) throw PolytopeError("facet " + tags_[f] + " has fewer than dim vertices");
  }
  for (std::size_t i = 0; i < tags_.size(); ++i)
    for (std::size_t j = i + 1; j < tags_.size(); ++j)
      if (tags_[i] == tags_[j]) throw PolytopeError("duplicate facet tag " + tags_[i]);
}

std::size_t SimplePolytope::facet_id(const std::string& tag) const {
  auto f = find_facet(tag);
  if (!f) throw std::out_of_range("no facet tagged " + tag);
  return *f;
}

std::optional<std::size_t> SimplePolytope::find_facet(const std::string& tag) const {
  for (std::size_t f = 0; f < tags_.size(); ++f)
    if (tags_[f] == tag) return f;
  return std::nullopt;
}

std::optional<std::size_t> SimplePolytope::vertex_with(FacetMask facets) const {
  for (std::size_t v = 0; v < vertex_facets_.size(); ++v)
    if (vertex_facets_[v] == facets) return v;
  return std::nullopt;
}

std::vector<std::size_t> SimplePolytope::facet_vertices(std::size_t f) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertex_facets_.size(); ++v)
    if (vertex_facets_[v] & facet_bit(f)) out.push_back(v);
  return out;
}

void SimplePolytope::compute_faces() const {
  std::vector<FacetMask> masks;
  for (FacetMask vm : vertex_facets_) {
    // Enumerate all submasks of vm, including 0.
    FacetMask s = vm;
    for (;;) {
      masks.push_back(s);
      if (s == 0) break;
      s = (s - 1) & vm;
    }
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<Face> faces;
  faces.reserve(masks.size());
  for (FacetMask s : masks) {
    Face f;
    f.facets = s;
    f.dim = dim_ - static_cast<std::size_t>(popcount(s));
    for (std::size_t v = 0; v < vertex_facets_.size(); ++v)
      if ((vertex_facets_[v] & s) == s) f.vertices.push_back(v);
    faces.push_back(std::move(f));
  }
  std::stable_sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.facets < b.facets;
  });
  faces_ = std::move(faces);
}

const std::vector<Face>& SimplePolytope::faces() const {
  if (!faces_) compute_faces();
  return *faces_;
}

std::vector<std::size_t> SimplePolytope::f_vector() const {
  std::vector<std::size_t> f(dim_, 0);
  for (const auto& face : faces())
    if (face.dim < dim_) ++f[face.dim];
  return f;
}

bool SimplePolytope::satisfies_euler_relation() const {
  long long alt = 0;
  auto f = f_vector();
  for (std::size_t i = 0; i < f.size(); ++i) alt += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(f[i]);
  return alt == (dim_ % 2 == 0 ? 0 : 2);
}

std::vector<SimplePolytope::Edge> SimplePolytope::edges() const {
  std::vector<Edge> out;
  for (const auto& face : faces()) {
    if (face.dim != 1) continue;
    if (face.vertices.size() != 2) throw PolytopeError("edge without exactly two vertices");
    out.push_back(Edge{face.vertices[0], face.vertices[1], face.facets});
  }
  return out;
}

const std::vector<RationalVector>& SimplePolytope::coordinates() const {
  if (!coords_) throw PolytopeError("polytope has no realization");
  return *coords_;
}

void SimplePolytope::set_coordinates(std::vector<RationalVector> coords) {
  if (coords.size() != vertex_facets_.size()) throw DimensionError("one coordinate vector per vertex required");
  coords_ = std::move(coords);
  frame_.reset();
}

const std::vector<RationalVector>& SimplePolytope::frame() const {
  if (!frame_) frame_ = canonical_frame(coordinates(), dim_);
  return *frame_;
}

void SimplePolytope::set_frame(std::vector<RationalVector> frame) {
  if (frame.size() != dim_) throw DimensionError("frame must have dim() vectors");
  frame_ = std::move(frame);
}

// ---------------------------------------------------------------------------
// Geometry helpers

std::vector<RationalVector> canonical_frame(const std::vector<RationalVector>& points, std::size_t dim) {
  if (points.empty()) throw PolytopeError("canonical_frame of an empty point set");
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(points[a].begin(), points[a].end(), points[b].begin(), points[b].end());
  });
  const RationalVector& base = points[order[0]];
  std::vector<RationalVector> frame;
  for (std::size_t i = 1; i < order.size() && frame.size() < dim; ++i) {
    RationalVector d = minus(points[order[i]], base);
    RationalMatrix trial = frame;
    trial.push_back(d);
    if (rank(trial) == trial.size()) frame.push_back(std::move(d));
  }
  if (frame.size() != dim) throw PolytopeError("point set does not span the expected dimension");
  return frame;
}

RationalVector centroid(const std::vector<RationalVector>& points, const std::vector<std::size_t>& which) {
  RationalVector c(points.at(which.at(0)).size(), Rational(0));
  for (std::size_t i : which)
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += points[i][k];
  for (auto& x : c) x /= static_cast<long long>(which.size());
  return c;
}

int orientation_sign(const std::vector<RationalVector>& frame, const std::vector<RationalVector>& vectors) {
  if (frame.size() != vectors.size()) throw DimensionError("orientation_sign: frame/vector count mismatch");
  RationalMatrix g(frame.size(), RationalVector(vectors.size()));
  for (std::size_t i = 0; i < frame.size(); ++i)
    for (std::size_t j = 0; j < vectors.size(); ++j) g[i][j] = dot(frame[i], vectors[j]);
  return det_sign(std::move(g));
}

SimplePolytope polytope_from_halfspaces(const HalfspaceSystem& system) {
  auto verts = enumerate_vertices(system);
  std::sort(verts.begin(), verts.end(), [](const EnumeratedVertex& a, const EnumeratedVertex& b) {
    return std::lexicographical_compare(a.point.begin(), a.point.end(), b.point.begin(), b.point.end());
  });
  const std::size_t ambient = system.ambient_dim;
  std::size_t eq_rank = 0;
  {
    RationalMatrix eqs;
    for (const auto& e : system.equalities) eqs.push_back(e.normal);
    eq_rank = rank(eqs);
  }
  const std::size_t dim = ambient - eq_rank;

  // An inequality is a facet iff its tight vertices span an affine (dim-1)-space.
  std::vector<std::size_t> facet_ineq;
  for (std::size_t i = 0; i < system.inequalities.size(); ++i) {
    std::vector<RationalVector> pts;
    for (const auto& v : verts)
      if (std::find(v.tight.begin(), v.tight.end(), i) != v.tight.end()) pts.push_back(v.point);
    if (pts.size() < dim) continue;
    RationalMatrix diffs;
    for (std::size_t k = 1; k < pts.size(); ++k) diffs.push_back(minus(pts[k], pts[0]));
    if (rank(diffs) == dim - 1) facet_ineq.push_back(i);
  }
  std::vector<std::string> tags;
  for (std::size_t i : facet_ineq) tags.push_back(system.inequalities[i].tag);
  std::vector<FacetMask> vmasks;
  std::vector<RationalVector> coords;
  for (const auto& v : verts) {
    FacetMask m = 0;
    for (std::size_t f = 0; f < facet_ineq.size(); ++f)
      if (std::find(v.tight.begin(), v.tight.end(), facet_ineq[f]) != v.tight.end()) m |= facet_bit(f);
    vmasks.push_back(m);
    coords.push_back(v.point);
  }
  SimplePolytope p(dim, std::move(tags), std::move(vmasks));
  p.set_coordinates(std::move(coords));
  return p;
}

namespace {

std::vector<RationalVector> barycentric_frame(std::size_t n) {
  // e_i - e_0, i = 1..n: the standard orientation of the simplex read in the
  // coordinates x_1..x_n.
  std::vector<RationalVector> frame;
  for (std::size_t i = 1; i <= n; ++i) {
    RationalVector v(n + 1, Rational(0));
    v[i] = 1;
    v[0] = -1;
    frame.push_back(std::move(v));
  }
  return frame;
}

std::string d_tag(std::size_t j) { return "D" + std::to_string(j); }

}  // namespace

HalfspaceSystem simplex_system(std::size_t n) {
  if (n < 1) throw std::invalid_argument("simplex dimension must be >= 1");
  HalfspaceSystem s;
  s.ambient_dim = n + 1;
  for (std::size_t j = 0; j <= n; ++j) {
    RationalVector a(n + 1, Rational(0));
    a[j] = 1;
    s.inequalities.push_back(Halfspace{a, Rational(0), d_tag(j)});
  }
  s.equalities.push_back(Hyperplane{RationalVector(n + 1, Rational(1)), Rational(1)});
  return s;
}

SimplePolytope simplex(std::size_t n) {
  if (n < 1) throw std::invalid_argument("simplex dimension must be >= 1");
  std::vector<std::string> tags;
  for (std::size_t j = 0; j <= n; ++j) tags.push_back(d_tag(j));
  const FacetMask all = facet_bit(n + 1) - 1;
  std::vector<FacetMask> masks;
  std::vector<RationalVector> coords;
  for (std::size_t j = 0; j <= n; ++j) {
    masks.push_back(all & ~facet_bit(j));
    RationalVector x(n + 1, Rational(0));
    x[j] = 1;
    coords.push_back(std::move(x));
  }
  SimplePolytope p(n, std::move(tags), std::move(masks));
  p.set_coordinates(std::move(coords));
  p.set_frame(barycentric_frame(n));
  return p;
}

HalfspaceSystem delta_q_system(std::size_t n, const Rational& r1, const Rational& r2) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("dimension n must be even and >= 4");
  if (!(r1 > 0 && r1 < r2 && r1 + 2 * r2 < 1))
    throw std::invalid_argument("truncation parameters need 0 < r1 < r2 and r1 + 2 r2 < 1");
  HalfspaceSystem s = simplex_system(n);
  const std::size_t half = n / 2;
  RationalVector h1(n + 1, Rational(0)), h2(n + 1, Rational(0)), h3(n + 1, Rational(0));
  for (std::size_t j = half; j <= n; ++j) h1[j] = 1;
  for (std::size_t j = 0; j <= half; ++j) h2[j] = 1;
  h3[half] = -1;
  s.inequalities.push_back(Halfspace{h1, r2, "P1"});
  s.inequalities.push_back(Halfspace{h2, r2, "P2"});
  s.inequalities.push_back(Halfspace{h3, r1 - 1, "P3"});
  return s;
}

SimplePolytope build_delta_Q(std::size_t n, const Rational& r1, const Rational& r2) {
  SimplePolytope p = polytope_from_halfspaces(delta_q_system(n, r1, r2));
  if (p.dim() != n) throw PolytopeError("truncated simplex has the wrong dimension");
  if (p.facet_count() != n + 4) throw PolytopeError("truncated simplex must have n+4 facets");
  const std::size_t p1 = p.facet_id("P1"), p2 = p.facet_id("P2"), p3 = p.facet_id("P3");
  for (FacetMask m : p.all_vertex_facets()) {
    int cuts = popcount(m & (facet_bit(p1) | facet_bit(p2) | facet_bit(p3)));
    if (cuts > 1) throw PolytopeError("cut facets of the truncated simplex intersect");
  }
  p.set_frame(barycentric_frame(n));
  return p;
}

SimplePolytope facet_polytope(const SimplePolytope& p, std::size_t f) {
  if (f >= p.facet_count()) throw std::out_of_range("facet_polytope: unknown facet");
  const auto verts = p.facet_vertices(f);
  FacetMask touching = 0;
  for (std::size_t v : verts) touching |= p.vertex_facets(v);
  touching &= ~facet_bit(f);
  const auto kept = facets_of(touching);
  std::vector<std::string> tags;
  std::vector<std::size_t> remap(p.facet_count(), kMaxFacets);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    remap[kept[i]] = i;
    tags.push_back(p.facet_tag(kept[i]));
  }
  std::vector<FacetMask> masks;
  for (std::size_t v : verts) {
    FacetMask m = 0;
    for (std::size_t g : facets_of(p.vertex_facets(v) & ~facet_bit(f))) m |= facet_bit(remap[g]);
    masks.push_back(m);
  }
  SimplePolytope out(p.dim() - 1, std::move(tags), std::move(masks));
  if (p.has_coordinates()) {
    std::vector<RationalVector> coords;
    for (std::size_t v : verts) coords.push_back(p.coordinates()[v]);
    std::vector<std::size_t> all(p.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::size_t> local(verts.size());
    std::iota(local.begin(), local.end(), 0);
    auto frame = canonical_frame(coords, out.dim());
    // Boundary orientation: outward vector followed by the facet frame is
    // positively oriented in the parent.
    RationalVector outward = minus(centroid(coords, local), centroid(p.coordinates(), all));
    std::vector<RationalVector> test{outward};
    test.insert(test.end(), frame.begin(), frame.end());
    int s = orientation_sign(p.frame(), test);
    if (s == 0) throw PolytopeError("degenerate boundary frame");
    if (s < 0 && !frame.empty())
      for (auto& x : frame[0]) x = -x;
    out.set_coordinates(std::move(coords));
    if (out.dim() > 0) out.set_frame(std::move(frame));
  }
  return out;
}

SimplePolytope product(const SimplePolytope& p, const SimplePolytope& q) {
  if (p.facet_count() + q.facet_count() > kMaxFacets) throw PolytopeError("product has too many facets");
  std::vector<std::string> tags;
  for (const auto& t : p.facet_tags()) tags.push_back("L." + t);
  for (const auto& t : q.facet_tags()) tags.push_back("R." + t);
  std::vector<FacetMask> masks;
  for (std::size_t i = 0; i < p.vertex_count(); ++i)
    for (std::size_t j = 0; j < q.vertex_count(); ++j)
      masks.push_back(p.vertex_facets(i) | (q.vertex_facets(j) << p.facet_count()));
  SimplePolytope out(p.dim() + q.dim(), std::move(tags), std::move(masks));
  if (p.has_coordinates() && q.has_coordinates()) {
    std::vector<RationalVector> coords;
    for (const auto& a : p.coordinates())
      for (const auto& b : q.coordinates()) {
        RationalVector c = a;
        c.insert(c.end(), b.begin(), b.end());
        coords.push_back(std::move(c));
      }
    const std::size_t pa = p.coordinates()[0].size(), qa = q.coordinates()[0].size();
    std::vector<RationalVector> frame;
    for (const auto& v : p.frame()) {
      RationalVector w = v;
      w.resize(pa + qa, Rational(0));
      frame.push_back(std::move(w));
    }
    for (const auto& v : q.frame()) {
      RationalVector w(pa, Rational(0));
      w.insert(w.end(), v.begin(), v.end());
      frame.push_back(std::move(w));
    }
    out.set_coordinates(std::move(coords));
    out.set_frame(std::move(frame));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphisms

namespace {

FacetMask map_mask(FacetMask m, const std::vector<std::size_t>& phi) {
  FacetMask out = 0;
  for (std::size_t f : facets_of(m)) out |= facet_bit(phi[f]);
  return out;
}

}  // namespace

bool verify_isomorphism(const SimplePolytope& p, const SimplePolytope& q, const std::vector<std::size_t>& phi) {
  if (p.dim() != q.dim() || p.facet_count() != q.facet_count() || p.vertex_count() != q.vertex_count())
    return false;
  if (phi.size() != p.facet_count()) return false;
  std::vector<bool> hit(q.facet_count(), false);
  for (std::size_t x : phi) {
    if (x >= q.facet_count() || hit[x]) return false;
    hit[x] = true;
  }
  std::vector<FacetMask> target = q.all_vertex_facets();
  std::sort(target.begin(), target.end());
  for (FacetMask m : p.all_vertex_facets())
    if (!std::binary_search(target.begin(), target.end(), map_mask(m, phi))) return false;
  return true;
}

std::size_t for_each_isomorphism(const SimplePolytope& p, const SimplePolytope& q,
                                 const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (p.dim() != q.dim() || p.facet_count() != q.facet_count() || p.vertex_count() != q.vertex_count())
    return 0;
  const std::size_t nf = p.facet_count();

  auto meet_counts = [](const SimplePolytope& x) {
    std::vector<std::vector<std::size_t>> c(x.facet_count(), std::vector<std::size_t>(x.facet_count(), 0));
    for (FacetMask m : x.all_vertex_facets()) {
      auto fs = facets_of(m);
      for (std::size_t a : fs)
        for (std::size_t b : fs) ++c[a][b];
    }
    return c;
  };
  const auto cp = meet_counts(p), cq = meet_counts(q);
  auto signature = [](const std::vector<std::vector<std::size_t>>& c, std::size_t f) {
    std::vector<std::size_t> row = c[f];
    std::size_t self = row[f];
    row.erase(row.begin() + static_cast<std::ptrdiff_t>(f));
    std::sort(row.begin(), row.end());
    row.push_back(self);
    return row;
  };
  std::vector<std::vector<std::size_t>> sp(nf), sq(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    sp[f] = signature(cp, f);
    sq[f] = signature(cq, f);
  }
  // Assign the most constrained (largest) facets first.
  std::vector<std::size_t> order(nf);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cp[a][a] > cp[b][b]; });

  std::vector<std::size_t> phi(nf, nf);
  std::vector<bool> used(nf, false);
  std::size_t visited = 0;
  bool stop = false;

  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (stop) return;
    if (depth == nf) {
      if (verify_isomorphism(p, q, phi)) {
        ++visited;
        if (!visit(phi)) stop = true;
      }
      return;
    }
    const std::size_t a = order[depth];
    for (std::size_t b = 0; b < nf && !stop; ++b) {
      if (used[b] || sp[a] != sq[b]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const std::size_t a2 = order[k];
        if (cp[a][a2] != cq[b][phi[a2]]) ok = false;
      }
      if (!ok) continue;
      phi[a] = b;
      used[b] = true;
      rec(depth + 1);
      used[b] = false;
      phi[a] = nf;
    }
  };
  rec(0);
  return visited;
}

std::optional<std::vector<std::size_t>> is_combinatorially_isomorphic(const SimplePolytope& p,
                                                                     const SimplePolytope& q) {
  std::optional<std::vector<std::size_t>> found;
  for_each_isomorphism(p, q, [&](const std::vector<std::size_t>& phi) {
    found = phi;
    return false;
  });
  return found;
}

namespace {

// Edge vectors at vertex v, one per facet through v (the edge leaving that
// facet), in increasing facet order of `order`.
std::vector<RationalVector> edge_frame(const SimplePolytope& p, std::size_t v, const std::vector<std::size_t>& order) {
  const FacetMask mv = p.vertex_facets(v);
  std::vector<RationalVector> out;
  for (std::size_t f : order) {
    const FacetMask edge = mv & ~facet_bit(f);
    std::optional<std::size_t> other;
    for (std::size_t u = 0; u < p.vertex_count(); ++u)
      if (u != v && (p.vertex_facets(u) & edge) == edge) {
        other = u;
        break;
      }
    if (!other) throw PolytopeError("vertex without the expected edge");
    out.push_back(minus(p.coordinates()[*other], p.coordinates()[v]));
  }
  return out;
}

}  // namespace

int isomorphism_orientation(const SimplePolytope& p, const SimplePolytope& q, const std::vector<std::size_t>& phi) {
  if (!verify_isomorphism(p, q, phi)) throw PolytopeError("isomorphism_orientation: not an isomorphism");
  if (p.dim() == 0) return 1;
  std::optional<int> sign;
  for (std::size_t v = 0; v < p.vertex_count(); ++v) {
    const auto fp = facets_of(p.vertex_facets(v));
    std::vector<std::size_t> fq;
    for (std::size_t f : fp) fq.push_back(phi[f]);
    const std::size_t w = *q.vertex_with(map_mask(p.vertex_facets(v), phi));
    int s = orientation_sign(p.frame(), edge_frame(p, v, fp)) * orientation_sign(q.frame(), edge_frame(q, w, fq));
    if (s == 0) throw PolytopeError("degenerate vertex cone");
    if (sign && *sign != s) throw PolytopeError("isomorphism has no consistent orientation character");
    sign = s;
  }
  return *sign;
}

}  // namespace tcob
