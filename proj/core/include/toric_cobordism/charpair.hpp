#pragma once

// Characteristic functions over Z (vectors up to sign) and GF(2), the pairs
// they form with a simple polytope, and delta-translations between pairs.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric_cobordism/exactalg.hpp"
#include "toric_cobordism/polytope.hpp"

namespace tcob {

enum class Ring { Z, GF2 };

std::string to_string(Ring r);  // "Z" / "GF2"
Ring parse_ring(const std::string& text);

class CharacteristicError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Facet-indexed vectors. A facet may be declared free: it carries no vector
/// and is part of the boundary of the resulting manifold (the cut facets of
/// the truncated simplex). Over GF(2) entries are reduced to 0/1.
class CharacteristicFunction {
 public:
  CharacteristicFunction() = default;
  CharacteristicFunction(Ring ring, std::size_t rank, std::size_t facet_count);

  Ring ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  std::size_t facet_count() const { return vectors_.size(); }

  void assign(std::size_t facet, IntVector v);
  void set_free(std::size_t facet);
  bool is_free(std::size_t facet) const;
  bool is_assigned(std::size_t facet) const { return vectors_.at(facet).has_value(); }
  const IntVector& vector(std::size_t facet) const;
  /// Throws CharacteristicError naming the first facet that is neither
  /// assigned nor free.
  void require_complete() const;

  /// Same class: equal up to sign (Z) or equal mod 2 (GF2).
  bool same_class(const IntVector& a, const IntVector& b) const;
  /// Mod-2 reduction of a Z function; free facets stay free.
  CharacteristicFunction reduced_mod2() const;

  friend bool operator==(const CharacteristicFunction&, const CharacteristicFunction&) = default;

 private:
  Ring ring_ = Ring::Z;
  std::size_t rank_ = 0;
  std::vector<std::optional<IntVector>> vectors_;
  std::vector<bool> free_;
};

/// Orientation datum: the polytope's frame plus a sign for the group factor
/// (-1 realizes the conjugate orientation).
struct CharacteristicPair {
  SimplePolytope polytope;
  CharacteristicFunction chi;
  int group_sign = 1;
};

struct VertexFailure {
  std::size_t vertex = 0;
  std::vector<std::string> facets;
  std::string reason;
};

struct ValidityReport {
  bool valid = true;
  std::size_t vertices_checked = 0;
  std::vector<VertexFailure> failures;
};

/// At every vertex the vectors of its non-free facets must extend to a basis
/// (Z: span a direct summand of full size; GF(2): be independent), and a
/// vertex with no free facet must carry exactly rank() of them.
ValidityReport validate(const CharacteristicPair& pair);

/// True iff some y satisfies <y, beta(F)> = 1 for every assigned facet.
/// Throws CharacteristicError for a Z pair or an invalid pair.
bool orientable_small_cover(const CharacteristicPair& pair);

/// The pair induced on a facet: each facet G of the facet polytope receives
/// the vector of the facet of the parent with the same tag. Throws
/// CharacteristicError if the result is invalid or a facet of the restriction
/// would be free.
CharacteristicPair restrict(const CharacteristicPair& pair, std::size_t facet);

enum class StandardKind { ComplexProjective, RealProjective };

/// Pair over the m-simplex: D_i carries e_i (i = 1..m) and D_0 carries the
/// all-ones vector. `conjugate` flips the group orientation sign (only
/// meaningful over Z) and stores -(1,..,1) as representative.
CharacteristicPair standard_pair(StandardKind kind, std::size_t m, bool conjugate = false);
std::string standard_name(StandardKind kind, std::size_t m, bool conjugate);

struct DeltaTranslation {
  std::vector<std::size_t> phi;  // facet i of the source -> facet phi[i] of the target
  IntMatrix delta;               // over GF(2) entries are 0/1
};

DeltaTranslation compose(const DeltaTranslation& first, const DeltaTranslation& second, Ring ring);

/// phi must be a combinatorial isomorphism, delta invertible over the ring,
/// free facets must go to free facets and delta(chi1(F)) = chi2(phi(F)) in
/// the ring's sense for every assigned facet.
bool verify_delta_translation(const CharacteristicPair& a, const CharacteristicPair& b,
                              const DeltaTranslation& t);

class SearchCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Searches facet bijections; for each, delta is determined by the vectors at
/// one vertex (all sign choices over Z) and then checked everywhere. Every
/// result is re-verified. `max_trials` bounds the number of (bijection, sign)
/// candidates; exceeding it throws SearchCapExceeded.
std::optional<DeltaTranslation> find_delta_translation(const CharacteristicPair& a, const CharacteristicPair& b,
                                                       std::size_t max_trials = 1u << 22);

/// All translations found by the same search (used to pick a normalized one).
std::vector<DeltaTranslation> find_all_delta_translations(const CharacteristicPair& a,
                                                          const CharacteristicPair& b,
                                                          std::size_t max_trials = 1u << 22);

/// Effect of the equivariant map induced by t on the orientations of the
/// quasitoric manifolds: det(delta) times the orientation character of phi
/// relative to the polytope frames times both group signs. Z pairs only.
int orientation_effect(const CharacteristicPair& a, const CharacteristicPair& b, const DeltaTranslation& t);

/// For small covers the group is discrete, so only the polytope factor
/// contributes: the orientation character of phi.
int small_cover_orientation_effect(const CharacteristicPair& a, const CharacteristicPair& b,
                                   const DeltaTranslation& t);

/// Span of the vectors of the facets in `facets` (the isotropy data G_F).
Gf2Subspace isotropy_gf2(const CharacteristicFunction& chi, FacetMask facets);

}  // namespace tcob
