#pragma once

// The explicit construction for n = 2k: the truncated simplex with its
// characteristic function, the three boundary pairs and the maps that
// identify the first two.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "toric_cobordism/charpair.hpp"
#include "toric_cobordism/exactalg.hpp"
#include "toric_cobordism/polytope.hpp"

namespace tcob {

inline const Rational kDefaultR1{1, 6};
inline const Rational kDefaultR2{1, 4};

/// xi_0 .. xi_n in Z^{n-1}; xi_j belongs to facet D_{n-j}.
std::vector<IntVector> xi(std::size_t n);
/// Componentwise mod-2 reduction of xi.
std::vector<IntVector> mu(std::size_t n);
/// Index j of the vector carried by facet D_a, i.e. n - a.
inline std::size_t xi_index_of_facet(std::size_t n, std::size_t a) { return n - a; }

/// Characteristic function on the facets D_0..D_n of the n-simplex.
CharacteristicFunction xi_function(std::size_t n);
CharacteristicFunction mu_function(std::size_t n);

/// The involution rho of {0..n} acting on xi-indices.
std::vector<std::size_t> rho(std::size_t n);
/// rho transported to facet labels: D_a -> D_{n - rho(n - a)}. Also the
/// coordinate permutation of R^{n+1} that carries P1 onto P2.
std::vector<std::size_t> phi_permutation(std::size_t n);

/// alpha_i -> alpha_{n-i} on Z^{n-1}.
IntMatrix h_matrix(std::size_t n);
/// alpha_1 -> -alpha_1, identity elsewhere.
IntMatrix f_matrix(std::size_t n);
/// h reduced mod 2.
IntMatrix hs_matrix(std::size_t n);

struct FamilyDescriptor {
  std::size_t k = 0;
  std::size_t n = 0;
  Ring ring = Ring::Z;
  Rational r1 = kDefaultR1;
  Rational r2 = kDefaultR2;
  CharacteristicPair full;                     // on the truncated simplex, cut facets free
  std::array<std::size_t, 3> cut_facets{};     // ids of P1, P2, P3 in full.polytope
  std::array<CharacteristicPair, 3> boundary;  // restrictions to P1, P2, P3
  std::vector<std::size_t> rho;
  std::vector<std::size_t> phi_permutation;
  std::vector<std::size_t> phi;  // facet bijection boundary[0] -> boundary[1]
  IntMatrix h;
  IntMatrix f;
  IntMatrix hs;
};

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws std::invalid_argument for n = 2k < 4 or bad (r1, r2), and
/// ConstructionError if any internal check fails.
FamilyDescriptor build_family(std::size_t k, Ring ring, const Rational& r1 = kDefaultR1,
                              const Rational& r2 = kDefaultR2);

/// Facet bijection between the facet polytopes of P1 and P2 induced by the
/// permutation on D-labels.
std::vector<std::size_t> phi_facet_bijection(const SimplePolytope& p1, const SimplePolytope& p2,
                                             const std::vector<std::size_t>& label_perm);

/// The gluing translation (phi, delta) from boundary[0] to boundary[1].
DeltaTranslation gluing_translation(const FamilyDescriptor& fam, const IntMatrix& delta);

struct ReflectionCount {
  std::vector<std::size_t> support_lower;  // mu~-indices expressing mu_{n/2-1}
  std::vector<std::size_t> support_top;    // mu~-indices expressing mu_n
  std::size_t count = 0;                   // n/2 when the expansion is as claimed
  int d_n = 0;                             // 1 + (-1)^{n/2}
};

/// mu~ equals mu except that mu~_{n/2-1} = mu~_n = 0. Expands mu_{n/2-1} and
/// mu_n over the nonzero mu~ by GF(2) solving. Throws ConstructionError if
/// either support differs from n/2.
ReflectionCount reflection_count(std::size_t n);

}  // namespace tcob
