#pragma once

// End-to-end cobordism certificate for CP^{2k-1} (complex) or RP^{4l+1}
// (real). Every gating check is recomputed from the family descriptor.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric_cobordism/family.hpp"
#include "toric_cobordism/serialize.hpp"

namespace tcob {

enum class CertificateKind { Complex, Real };

std::string to_string(CertificateKind k);
CertificateKind parse_kind(const std::string& text);

/// The requested certificate cannot exist (real kind with 4 | n).
class InvalidRequest : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CertificateOptions {
  Rational r1 = kDefaultR1;
  Rational r2 = kDefaultR2;
  std::uint64_t seed = 0;
  std::size_t seeds_for_invariance = 5;
};

struct Certificate {
  std::size_t k = 0;
  CertificateKind kind = CertificateKind::Complex;
  std::vector<Check> checks;            // gating
  std::vector<Check> audit;             // claims of the construction checked but not gating
  std::vector<std::string> assumptions; // statements cited, not checked
  Json body;                            // validation, gluing, boundary, homology sections

  bool passed() const;
  std::vector<std::string> failed_checks() const;
};

Certificate glue_certificate(std::size_t k, CertificateKind kind, const CertificateOptions& options = {});

Json to_json(const Certificate& c, const CertificateOptions& options);

}  // namespace tcob
