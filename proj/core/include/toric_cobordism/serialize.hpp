#pragma once

// JSON forms of every artifact. Rationals are "p/q" strings, objects use
// sorted keys, so dumping the same value always yields the same bytes.

#include <string>

#include "json.hpp"
#include "toric_cobordism/cellular.hpp"
#include "toric_cobordism/charpair.hpp"
#include "toric_cobordism/family.hpp"
#include "toric_cobordism/polytope.hpp"

namespace tcob {

using Json = nlohmann::json;

/// Malformed or inconsistent JSON input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const SimplePolytope& p);
SimplePolytope polytope_from_json(const Json& j);

Json to_json(const CharacteristicPair& pair);
CharacteristicPair pair_from_json(const Json& j);

Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json to_json(const DeltaTranslation& t);
DeltaTranslation translation_from_json(const Json& j);

Json to_json(const ValidityReport& r);
Json to_json(const HomologyTable& h);
HomologyTable homology_from_json(const Json& j);
Json to_json(const LinearFunctional& l);
Json to_json(const IndexProfile& p, const SimplePolytope& polytope);

Json to_json(const FamilyDescriptor& fam);
FamilyDescriptor family_from_json(const Json& j);

/// Canonical text form: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace tcob
