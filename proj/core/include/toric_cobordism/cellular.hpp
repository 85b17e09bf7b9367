#pragma once

// Homology: the Morse-index count for H_*(W, dW) and an independent
// chain-level oracle for GF(2) quotient spaces (small covers and the
// manifold S with small cover boundary).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toric_cobordism/charpair.hpp"
#include "toric_cobordism/exactalg.hpp"
#include "toric_cobordism/family.hpp"
#include "toric_cobordism/polytope.hpp"

namespace tcob {

struct LinearFunctional {
  IntVector coefficients;  // on ambient coordinates
  std::uint64_t seed = 0;
  std::string kind;        // "random" or "anchored"
};

class TieError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational evaluate(const LinearFunctional& l, const RationalVector& x);
bool distinguishes_vertices(const SimplePolytope& p, const LinearFunctional& l);

/// Integer coefficients uniform in [-10^6, 10^6] from mt19937_64(seed),
/// redrawn from the same stream until all vertices get distinct values.
LinearFunctional random_functional(const SimplePolytope& p, std::uint64_t seed);

/// For the truncated simplex of dimension n: large weights on x_{n/2+1}
/// and x_0 so the maximum sits on the old edge A_0 A_{n/2+1}; the remaining
/// coefficients are small distinct seeded values. Redrawn on ties.
LinearFunctional anchored_functional(const SimplePolytope& p, std::uint64_t seed);

struct IndexPair {
  std::size_t vertex;
  std::size_t edge;  // index into SimplePolytope::edges()
};

struct IndexProfile {
  std::vector<std::size_t> index;           // per vertex
  std::vector<bool> edge_old;               // per edge
  std::vector<std::vector<IndexPair>> I;    // I[j], j = 0..dim (I[0] is always empty)
  std::vector<std::size_t> index_counts;    // number of vertices of each index
  std::vector<std::size_t> sizes() const;   // |I_j|, j = 0..dim
};

/// Edges whose facets avoid `cut_facets` are old. With `strict`, a vertex
/// contributing two pairs raises std::logic_error. Throws TieError if l
/// does not distinguish the vertices.
IndexProfile vertex_indices(const SimplePolytope& p, const LinearFunctional& l, FacetMask cut_facets,
                            bool strict = true);
FacetMask cut_facet_mask(const SimplePolytope& p);  // facets tagged P*

struct HomologyGroup {
  std::size_t degree = 0;
  std::size_t betti = 0;
  std::vector<Integer> torsion;  // invariant factors > 1
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};
using HomologyTable = std::vector<HomologyGroup>;

/// H_0 = Z, H_{2j-1} = Z^{|I_j|}, zero elsewhere; degrees 0 .. 2n-1.
HomologyTable homology_W_rel_boundary(const FamilyDescriptor& fam, const LinearFunctional& l,
                                      IndexProfile* profile = nullptr);

struct QuotientCell {
  std::size_t face;     // index into the polytope's faces()
  Gf2Vector coset_rep;  // canonical representative of the coset of G_F
};

struct QuotientCWComplex {
  std::size_t dim = 0;
  std::size_t group_rank = 0;
  std::vector<Face> faces;                       // copy of the polytope's faces
  std::vector<bool> face_kept;
  std::vector<std::vector<QuotientCell>> cells;  // by dimension
  /// boundary[d] lists, for every d-cell, (cell index in dim d-1, sign).
  std::vector<std::vector<std::vector<std::pair<std::size_t, int>>>> boundary;
};

/// Cells (g + G_F, F) over all faces F not lying in an excluded facet.
/// Incidence signs come from the oriented faces of the realization.
QuotientCWComplex build_quotient_complex(const CharacteristicPair& pair, FacetMask excluded = 0);

struct ChainComplex {
  Ring ring = Ring::Z;
  std::vector<std::size_t> ranks;          // cells per degree
  std::vector<SparseIntMatrix> boundary;   // boundary[d] : C_d -> C_{d-1}; boundary[0] is 0 x ranks[0]
};

class ChainComplexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws ChainComplexError if some composite boundary is nonzero.
ChainComplex chain_complex(const QuotientCWComplex& c, Ring ring);
bool boundary_squares_to_zero(const ChainComplex& c);
HomologyTable homology(const ChainComplex& c);
long long euler_characteristic(const ChainComplex& c);
long long euler_characteristic(const HomologyTable& h);  // from Betti numbers

struct EulerCrossCheck {
  long long complex_side = 0;  // chi of the relative complex
  long long index_side = 0;    // sum_j (-1)^j |I_j|
  bool agree = false;
};
EulerCrossCheck euler_cross_check(const FamilyDescriptor& fam, const LinearFunctional& l);

struct OrientabilityVerdict {
  bool orientable = false;
  bool oracle_used = false;
  std::optional<HomologyTable> oracle;  // relative Z homology when computed
  bool parity_formula = false;           // n = 4l+2
  int d_n = 0;
};

/// Largest n for which the chain-level oracle runs by default.
constexpr std::size_t kOracleMaxN = 6;

/// GF(2) family only. Throws ChainComplexError when oracle, parity and d_n
/// disagree.
OrientabilityVerdict is_orientable_space(const FamilyDescriptor& fam, std::size_t oracle_max_n = kOracleMaxN);

/// Orientation effect of the small cover gluing (Phi, h_s) read off the
/// relative fundamental cycle of (S, dS). Requires n = 4l+2 and n within the
/// oracle limit.
int gluing_orientation_oracle(const FamilyDescriptor& fam);

}  // namespace tcob
