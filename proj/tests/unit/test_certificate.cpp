#include "doctest.h"
#include "toric_cobordism/certificate.hpp"

using namespace tcob;

TEST_CASE("complex certificate for n = 4") {
  const auto c = glue_certificate(2, CertificateKind::Complex);
  CHECK(c.passed());
  CHECK(c.failed_checks().empty());
  CertificateOptions opt;
  const Json j = to_json(c, opt);
  CHECK(j["boundary"]["standard"] == "conjugate CP3");
  CHECK(j["gluing"]["orientation_effect"] == -1);
  CHECK(j["boundary"]["translation"]["orientation_effect"] == 1);
  CHECK(j["verified"] == true);
  CHECK(dump(to_json(glue_certificate(2, CertificateKind::Complex), opt)) == dump(j));
}

TEST_CASE("real certificates exist only for n = 4l+2") {
  CHECK_THROWS_AS(glue_certificate(2, CertificateKind::Real), InvalidRequest);
  CHECK_THROWS_AS(glue_certificate(4, CertificateKind::Real), InvalidRequest);
  const auto c = glue_certificate(3, CertificateKind::Real);
  CHECK(c.passed());
  const Json j = to_json(c, {});
  CHECK(j["boundary"]["standard"] == "RP5");
  CHECK(j["gluing"]["oracle_orientation_effect"] == -1);
}

TEST_CASE("audit entries do not gate") {
  const auto c = glue_certificate(3, CertificateKind::Complex);
  bool rho_audit_failed = false;
  for (const auto& a : c.audit)
    if (a.name == "rho_even_permutation") rho_audit_failed = !a.passed;
  CHECK(rho_audit_failed);
  CHECK(c.passed());
}

TEST_CASE("kinds") {
  CHECK(parse_kind("real") == CertificateKind::Real);
  CHECK(to_string(CertificateKind::Complex) == "complex");
  CHECK_THROWS_AS(parse_kind("quaternionic"), std::invalid_argument);
}
