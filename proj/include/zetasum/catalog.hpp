#ifndef ZETASUM_CATALOG_HPP
#define ZETASUM_CATALOG_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zetasum/approximation.hpp"

namespace zetasum {

enum class IdentityStatus { claimed, disputed };

// One sample point of an identity: independent left- and right-hand
// evaluation recipes.  Recipes must not share the closed-form value under
// test.
struct IdentityCheck {
  std::string label;  // e.g. "a=1/4"
  std::function<Approximation()> lhs;
  std::function<Approximation()> rhs;
};

// A catalog entry: a stable id, human-readable description, the evaluation
// recipes, a tolerance, and the claim status.  Disputed entries report their
// measured discrepancy and never contribute to the pass/fail exit code.
struct IdentityRecord {
  std::string id;
  std::string description;
  std::vector<IdentityCheck> checks;
  double tol = 1e-8;
  IdentityStatus status = IdentityStatus::claimed;
  std::string citation;  // classical source for the identity
};

struct VerificationResult {
  std::string id;
  double lhs_value = 0.0;
  double rhs_value = 0.0;
  double abs_diff = 0.0;  // worst over the entry's sample points
  double rel_diff = 0.0;
  std::optional<bool> passed;  // engaged for claimed entries only
  double elapsed_ms = 0.0;
  std::string notes;
  IdentityStatus status = IdentityStatus::claimed;
  double tol = 0.0;
};

struct VerificationSummary {
  long passed = 0;
  long failed = 0;
  long disputed = 0;
};

// All registered entries in id order (strictly sorted, no duplicates).
const std::vector<IdentityRecord>& list_identities();

// Look up a registered entry; throws DomainError for unknown ids.
const IdentityRecord& find_identity(const std::string& id);

// Evaluate one record.  Evaluator failures are captured in the result notes
// with passed = false; they do not propagate.
VerificationResult verify_record(const IdentityRecord& record,
                                 std::optional<double> tol_override = {});

// Verify a registered identity by id.
VerificationResult verify_identity(const std::string& id,
                                   std::optional<double> tol_override = {});

// Run every entry whose id starts with `filter` (all when empty), optionally
// fanning entries out across worker threads.  Result order is by id
// regardless of parallelism, and values are bit-identical either way.
std::vector<VerificationResult> verify_all(const std::string& filter = "",
                                           bool parallel = false,
                                           std::optional<double> tol_override = {});

VerificationSummary summarize(const std::vector<VerificationResult>& results);

// Human-readable manifest (id, status, tol, description, citation) for
// documentation generation.
std::string registry_manifest();

}  // namespace zetasum

#endif  // ZETASUM_CATALOG_HPP
