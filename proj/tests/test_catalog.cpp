#include <cmath>
#include <cstring>

#include "doctest.h"
#include "zetasum/catalog.hpp"

using namespace zetasum;

TEST_CASE("registry: membership, ordering, disputed count") {
  const auto& reg = list_identities();
  CHECK(reg.size() >= 35);

  bool has_318 = false;
  long disputed = 0;
  for (const auto& r : reg) {
    if (r.id == "I-3.1.8") has_318 = true;
    if (r.status == IdentityStatus::disputed) ++disputed;
    CHECK(!r.checks.empty());
    CHECK(r.tol > 0.0);
  }
  CHECK(has_318);
  CHECK(disputed == 2);

  for (size_t i = 1; i < reg.size(); ++i) {
    CHECK(reg[i - 1].id < reg[i].id);  // strictly sorted, no duplicates
  }
}

TEST_CASE("verify_identity: representative entries") {
  VerificationResult r318 = verify_identity("I-3.1.8");
  CHECK(r318.passed.has_value());
  CHECK(*r318.passed);
  CHECK(r318.abs_diff <= 1e-8);
  CHECK(r318.lhs_value == doctest::Approx(-0.0386078).epsilon(1e-5));
  CHECK(r318.rhs_value == doctest::Approx(-0.0386078).epsilon(1e-5));

  VerificationResult r3423 = verify_identity("I-3.4.23");
  CHECK(*r3423.passed);
  CHECK(r3423.abs_diff <= 1e-9);
  CHECK(r3423.rhs_value == 1.0);

  VerificationResult r410 = verify_identity("I-4.10-n1");
  CHECK(*r410.passed);
  CHECK(r410.abs_diff <= 1e-8);
  CHECK(r410.rhs_value == doctest::Approx(0.0581522694).epsilon(1e-6));

  CHECK_THROWS_AS(verify_identity("I-bogus"), DomainError);
}

TEST_CASE("verify_identity: tolerance override is honored") {
  VerificationResult strict = verify_identity("I-3.1.8", 1e-300);
  CHECK(strict.passed.has_value());
  CHECK_FALSE(*strict.passed);
  CHECK(strict.tol == 1e-300);
}

TEST_CASE("verify_all: filter slices the registry") {
  auto res = verify_all("I-3.2");
  REQUIRE(res.size() == 3);
  CHECK(res[0].id == "I-3.2.2");
  CHECK(res[1].id == "I-3.2.3");
  CHECK(res[2].id == "I-3.2.4");
  for (const auto& r : res) CHECK(*r.passed);
}

TEST_CASE("verify_all: parallel results are bit-identical to serial") {
  auto serial = verify_all("I-3.6", false);
  auto parallel = verify_all("I-3.6", true);
  REQUIRE(serial.size() == parallel.size());
  for (size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].id == parallel[i].id);
    CHECK(std::memcmp(&serial[i].lhs_value, &parallel[i].lhs_value,
                      sizeof(double)) == 0);
    CHECK(std::memcmp(&serial[i].rhs_value, &parallel[i].rhs_value,
                      sizeof(double)) == 0);
    CHECK(std::memcmp(&serial[i].abs_diff, &parallel[i].abs_diff,
                      sizeof(double)) == 0);
  }
}

TEST_CASE("independence: a corrupted right side must flip the verdict") {
  int sampled = 0;
  for (const char* id : {"I-3.1.8", "I-3.2.3", "I-3.4.23", "I-3.6.10"}) {
    IdentityRecord broken = find_identity(id);
    for (auto& chk : broken.checks) {
      chk.rhs = [] { return Approximation{123.456, 0.0, 1}; };
    }
    VerificationResult r = verify_record(broken);
    CHECK(r.passed.has_value());
    CHECK_FALSE(*r.passed);
    ++sampled;
  }
  CHECK(sampled >= 3);
}

TEST_CASE("evaluator failures are captured, not propagated") {
  IdentityRecord broken = find_identity("I-3.1.8");
  broken.checks[0].lhs = []() -> Approximation {
    throw DomainError("synthetic failure");
  };
  VerificationResult r = verify_record(broken);
  CHECK(r.passed.has_value());
  CHECK_FALSE(*r.passed);
  CHECK(r.notes.find("synthetic failure") != std::string::npos);
}

TEST_CASE("disputed entries report finite discrepancies and never pass/fail") {
  for (const char* id : {"I-3.7.15", "I-3.6.13v14"}) {
    VerificationResult r = verify_identity(id);
    CHECK_FALSE(r.passed.has_value());
    CHECK(std::isfinite(r.abs_diff));
    CHECK(r.abs_diff > 0.0);
    CHECK(!r.notes.empty());
    CHECK(r.status == IdentityStatus::disputed);
  }
}

TEST_CASE("disputed entries never affect the summary failure count") {
  auto res = verify_all("I-3.7.15");
  REQUIRE(res.size() == 1);
  VerificationSummary s = summarize(res);
  CHECK(s.failed == 0);
  CHECK(s.passed == 0);
  CHECK(s.disputed == 1);
}

TEST_CASE("manifest lists every entry with status and citation") {
  std::string m = registry_manifest();
  CHECK(m.find("I-3.1.8") != std::string::npos);
  CHECK(m.find("disputed") != std::string::npos);
  CHECK(m.find("Nielsen") != std::string::npos);
  size_t lines = 0;
  for (char c : m) lines += (c == '\n');
  CHECK(lines >= 3 * list_identities().size());
}
