#pragma once

// Combinatorial simple polytopes with optional exact rational realization.
//
// A polytope is stored by its vertex-facet incidence: every vertex carries the
// set of facets through it (exactly dim() of them, since the polytope is
// simple). Faces are identified with the facet sets that define them; in a
// simple polytope a set S of facets meets in a face of codimension |S| iff
// the common vertex set is nonempty.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric_cobordism/exactalg.hpp"

namespace tcob {

/// Bit set of facet ids. Polytopes are limited to 64 facets.
using FacetMask = std::uint64_t;
constexpr std::size_t kMaxFacets = 64;

inline FacetMask facet_bit(std::size_t f) { return FacetMask{1} << f; }
int popcount(FacetMask m);
std::vector<std::size_t> facets_of(FacetMask m);

/// Halfspace <normal, x> >= offset.
struct Halfspace {
  RationalVector normal;
  Rational offset;
  std::string tag;
};

/// Affine equality <normal, x> = offset.
struct Hyperplane {
  RationalVector normal;
  Rational offset;
};

struct HalfspaceSystem {
  std::size_t ambient_dim = 0;
  std::vector<Halfspace> inequalities;
  std::vector<Hyperplane> equalities;
};

class UnboundedSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class EmptySystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
/// Raised when a construction produces something that is not a simple
/// polytope or violates its own postconditions.
class PolytopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumeratedVertex {
  RationalVector point;
  std::vector<std::size_t> tight;  // indices of inequalities attained with equality
};

/// Exhaustive vertex enumeration: every d-subset of inequalities (d = the
/// dimension of the equality-constrained affine space) is solved exactly and
/// kept if feasible. Throws UnboundedSystem / EmptySystem.
std::vector<EnumeratedVertex> enumerate_vertices(const HalfspaceSystem& system);

struct Face {
  FacetMask facets = 0;                // defining facets
  std::size_t dim = 0;
  std::vector<std::size_t> vertices;   // sorted vertex ids
};

class SimplePolytope {
 public:
  SimplePolytope() = default;
  /// Builds and checks simplicity. `vertex_facets[v]` lists the facets at v.
  SimplePolytope(std::size_t dim, std::vector<std::string> facet_tags,
                 std::vector<FacetMask> vertex_facets);

  std::size_t dim() const { return dim_; }
  std::size_t facet_count() const { return tags_.size(); }
  std::size_t vertex_count() const { return vertex_facets_.size(); }
  const std::vector<std::string>& facet_tags() const { return tags_; }
  const std::string& facet_tag(std::size_t f) const { return tags_.at(f); }
  /// Id of the facet with the given tag; throws std::out_of_range if absent.
  std::size_t facet_id(const std::string& tag) const;
  std::optional<std::size_t> find_facet(const std::string& tag) const;

  FacetMask vertex_facets(std::size_t v) const { return vertex_facets_.at(v); }
  const std::vector<FacetMask>& all_vertex_facets() const { return vertex_facets_; }
  /// Vertex with exactly the given facet set, if any.
  std::optional<std::size_t> vertex_with(FacetMask facets) const;
  std::vector<std::size_t> facet_vertices(std::size_t f) const;

  /// All nonempty faces including the polytope itself (facets() == 0),
  /// ordered by dimension, then by facet mask.
  const std::vector<Face>& faces() const;
  std::vector<std::size_t> f_vector() const;  // f_0 .. f_{dim-1}
  bool satisfies_euler_relation() const;

  struct Edge {
    std::size_t a;
    std::size_t b;
    FacetMask facets;
  };
  std::vector<Edge> edges() const;

  // Realization -------------------------------------------------------------
  bool has_coordinates() const { return coords_.has_value(); }
  const std::vector<RationalVector>& coordinates() const;
  void set_coordinates(std::vector<RationalVector> coords);
  /// Oriented basis of the direction space of the realization. Defaults to a
  /// canonical frame; facet_polytope() installs the boundary orientation.
  const std::vector<RationalVector>& frame() const;
  void set_frame(std::vector<RationalVector> frame);

 private:
  void compute_faces() const;

  std::size_t dim_ = 0;
  std::vector<std::string> tags_;
  std::vector<FacetMask> vertex_facets_;
  std::optional<std::vector<RationalVector>> coords_;
  mutable std::optional<std::vector<RationalVector>> frame_;
  mutable std::optional<std::vector<Face>> faces_;
};

/// Canonical oriented frame for a point set: lexicographically smallest point
/// as base, then greedily the first independent difference vectors.
std::vector<RationalVector> canonical_frame(const std::vector<RationalVector>& points,
                                            std::size_t dim);
RationalVector centroid(const std::vector<RationalVector>& points,
                        const std::vector<std::size_t>& which);
/// sign det(F^T X) for frame F and vectors X of the same span.
int orientation_sign(const std::vector<RationalVector>& frame,
                     const std::vector<RationalVector>& vectors);

/// Builds a simple polytope from a halfspace system. Inequalities that are
/// never tight are dropped; the rest become facets tagged by Halfspace::tag.
SimplePolytope polytope_from_halfspaces(const HalfspaceSystem& system);

/// Standard n-simplex in the hyperplane sum(x) = 1 of R^{n+1}. Facet "D<j>"
/// is x_j = 0 and misses vertex A_j = e_j.
SimplePolytope simplex(std::size_t n);
HalfspaceSystem simplex_system(std::size_t n);

/// Halfspace system of the simplex truncated near the two complementary
/// faces and near the vertex A_{n/2}. Facets "D0".."Dn", "P1", "P2", "P3".
HalfspaceSystem delta_q_system(std::size_t n, const Rational& r1, const Rational& r2);
SimplePolytope build_delta_Q(std::size_t n, const Rational& r1, const Rational& r2);

/// The facet `f` of `p` as a polytope of one dimension lower. Its facets are
/// the facets of `p` meeting `f`, with tags preserved.
SimplePolytope facet_polytope(const SimplePolytope& p, std::size_t f);

/// Product polytope; facet tags become "L.<tag>" and "R.<tag>".
SimplePolytope product(const SimplePolytope& p, const SimplePolytope& q);

/// A facet bijection phi (facet i of p -> facet phi[i] of q) is an
/// isomorphism iff it maps the vertex facet-sets of p onto those of q.
bool verify_isomorphism(const SimplePolytope& p, const SimplePolytope& q,
                        const std::vector<std::size_t>& phi);

/// Backtracking search over facet bijections; every result is re-verified.
/// `visit` is called for each isomorphism found and returns false to stop.
/// Returns the number of isomorphisms visited.
std::size_t for_each_isomorphism(const SimplePolytope& p, const SimplePolytope& q,
                                 const std::function<bool(const std::vector<std::size_t>&)>& visit);
std::optional<std::vector<std::size_t>> is_combinatorially_isomorphic(const SimplePolytope& p,
                                                                     const SimplePolytope& q);

/// Orientation character of a combinatorial isomorphism between two realized
/// polytopes, relative to their frames: +1 preserving, -1 reversing. Read off
/// at every vertex from the edge frames; throws PolytopeError if the vertices
/// disagree.
int isomorphism_orientation(const SimplePolytope& p, const SimplePolytope& q,
                            const std::vector<std::size_t>& phi);

}  // namespace tcob
