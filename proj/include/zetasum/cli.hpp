#ifndef ZETASUM_CLI_HPP
#define ZETASUM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "zetasum/catalog.hpp"

namespace zetasum::cli {

enum class ReportFormat { text, json };

struct RunConfig {
  std::optional<double> tolerance_override;
  long max_terms = 20000;   // >= 16
  long quad_budget = 200000;  // >= 1000
  ReportFormat format = ReportFormat::text;
  std::string filter;
  bool parallel = false;
};

// Format a double with shortest round-trip representation (15..17 significant
// digits, first that re-parses to the same value).
std::string format_double(double v);

// Render verification results.  json emits one object per line with fields
// {id, lhs, rhs, abs_diff, rel_diff, passed, status, elapsed_ms, notes}
// (passed is null for disputed entries); text emits an aligned table plus a
// summary line "passed P / failed F / disputed D".
std::string format_report(const std::vector<VerificationResult>& results,
                          ReportFormat format);

// Entry point shared by the binary and the tests.  Returns the process exit
// code: 0 all claimed checks passed (or non-verify command succeeded),
// 1 at least one claimed check failed, 2 usage/config error.
int run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err);

}  // namespace zetasum::cli

#endif  // ZETASUM_CLI_HPP
