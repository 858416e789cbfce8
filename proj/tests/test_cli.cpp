#include <cstdlib>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "zetasum/cli.hpp"

using namespace zetasum;
using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string strip_elapsed(const std::string& s) {
  static const std::regex re("\"elapsed_ms\":[^,]*,");
  return std::regex_replace(s, re, "");
}

}  // namespace

TEST_CASE("format_double round-trips") {
  for (double v : {0.1, 1.0 / 3.0, 123456.789, 1e-300, -0.0386078324507664}) {
    std::string s = cli::format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}

TEST_CASE("format_report: empty and synthetic results") {
  std::string empty = cli::format_report({}, cli::ReportFormat::text);
  CHECK(empty.find("passed 0 / failed 0 / disputed 0") != std::string::npos);

  VerificationResult pass;
  pass.id = "I-test";
  pass.lhs_value = 1.0;
  pass.rhs_value = 1.0;
  pass.abs_diff = 0.0;
  pass.rel_diff = 0.0;
  pass.passed = true;
  pass.elapsed_ms = 1.5;
  std::string one = cli::format_report({pass}, cli::ReportFormat::json);
  CHECK(std::count(one.begin(), one.end(), '\n') == 1);
  json j = json::parse(one);
  CHECK(j["passed"] == true);
  CHECK(j["id"] == "I-test");

  VerificationResult disp = pass;
  disp.status = IdentityStatus::disputed;
  disp.passed.reset();
  disp.notes = "quote \" and backslash \\";
  json jd = json::parse(cli::format_report({disp}, cli::ReportFormat::json));
  CHECK(jd["passed"].is_null());
  CHECK(jd["notes"] == "quote \" and backslash \\");
}

TEST_CASE("format_report: golden json layout is field-stable") {
  VerificationResult r;
  r.id = "I-x";
  r.lhs_value = 0.5;
  r.rhs_value = 0.25;
  r.abs_diff = 0.25;
  r.rel_diff = 0.5;
  r.passed = false;
  r.elapsed_ms = 2.0;
  r.notes = "n";
  const std::string expected =
      "{\"id\":\"I-x\",\"lhs\":0.5,\"rhs\":0.25,\"abs_diff\":0.25,"
      "\"rel_diff\":0.5,\"passed\":false,\"status\":\"claimed\","
      "\"elapsed_ms\":2,\"notes\":\"n\"}\n";
  CHECK(cli::format_report({r}, cli::ReportFormat::json) == expected);
}

TEST_CASE("cli: list") {
  CliRun r = run_cli({"list"});
  CHECK(r.code == 0);
  CHECK(r.out.find("I-3.1.8") != std::string::npos);

  CliRun rj = run_cli({"list", "--format", "json"});
  CHECK(rj.code == 0);
  std::istringstream lines(rj.out);
  std::string line;
  size_t n = 0;
  while (std::getline(lines, line)) {
    json j = json::parse(line);
    CHECK(j.contains("id"));
    CHECK(j.contains("status"));
    ++n;
  }
  CHECK(n == list_identities().size());
}

TEST_CASE("cli: eval") {
  CliRun ci = run_cli({"eval", "Ci", "3.14159265"});
  CHECK(ci.code == 0);
  double v = std::strtod(ci.out.c_str(), nullptr);
  CHECK(v == doctest::Approx(0.0736679).epsilon(1e-5));

  CliRun json_out = run_cli({"--format", "json", "eval", "psi", "1"});
  CHECK(json_out.code == 0);
  json j = json::parse(json_out.out);
  CHECK(j["fn"] == "psi");
  CHECK(j["value"].get<double>() ==
        doctest::Approx(-0.5772156649015329).epsilon(1e-12));
  CHECK(j["work"].get<long>() >= 1);

  CHECK(run_cli({"eval", "nosuchfn", "1"}).code == 2);
  CHECK(run_cli({"eval", "Ci"}).code == 2);           // missing argument
  CHECK(run_cli({"eval", "Ci", "1", "2"}).code == 2); // extra argument
  CHECK(run_cli({"eval", "Ci", "--", "-1"}).code == 2);  // domain error
}

TEST_CASE("cli: verify single id, exit codes, tolerance override") {
  CliRun ok = run_cli({"verify", "--id", "I-3.6.9"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("PASS") != std::string::npos);
  CHECK(ok.out.find("passed 1 / failed 0 / disputed 0") != std::string::npos);

  CliRun fail = run_cli({"--tol", "1e-300", "verify", "--id", "I-3.6.9"});
  CHECK(fail.code == 1);
  CHECK(fail.out.find("FAIL") != std::string::npos);

  CHECK(run_cli({"verify", "--id", "NOPE"}).code == 2);
}

TEST_CASE("cli: disputed entries do not affect the exit code") {
  CliRun disp = run_cli({"verify", "--id", "I-3.6.13v14", "--format", "json"});
  CHECK(disp.code == 0);
  json j = json::parse(disp.out);
  CHECK(j["passed"].is_null());
  CHECK(j["status"] == "disputed");
  CHECK(j["notes"].get<std::string>().find("diff") != std::string::npos);
}

TEST_CASE("cli: verify json output is deterministic modulo elapsed_ms") {
  CliRun a = run_cli({"verify", "--filter", "I-3.6.1", "--format", "json"});
  CliRun b = run_cli({"verify", "--filter", "I-3.6.1", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(strip_elapsed(a.out) == strip_elapsed(b.out));

  CliRun p = run_cli({"--parallel", "verify", "--filter", "I-3.6.1",
                      "--format", "json"});
  CHECK(strip_elapsed(p.out) == strip_elapsed(a.out));
}

TEST_CASE("cli: json schema fields are exactly as documented") {
  CliRun r = run_cli({"verify", "--id", "I-3.2.3", "--format", "json"});
  json j = json::parse(r.out);
  const std::vector<std::string> want = {"id",     "lhs",       "rhs",
                                         "abs_diff", "rel_diff", "passed",
                                         "status", "elapsed_ms", "notes"};
  CHECK(j.size() == want.size());
  for (const auto& k : want) CHECK(j.contains(k));
}

TEST_CASE("cli: usage and config errors exit 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"--quad-budget", "10", "list"}).code == 2);
  CHECK(run_cli({"--max-terms", "2", "list"}).code == 2);
  CHECK(run_cli({"engine", "poisson", "--preset", "nope"}).code == 2);
  CHECK(run_cli({"engine", "warp", "--preset", "exp"}).code == 2);
  CHECK(run_cli({"--format", "yaml", "list"}).code == 2);
}

TEST_CASE("cli: engine subcommand") {
  CliRun r = run_cli({"engine", "poisson", "--preset", "gauss"});
  CHECK(r.code == 0);
  CHECK(r.out.find("converged = true") != std::string::npos);

  CliRun j = run_cli({"--format", "json", "engine", "abel-plana", "--preset",
                      "half-exp"});
  CHECK(j.code == 0);
  json rep = json::parse(j.out);
  CHECK(rep["converged"] == true);
  CHECK(rep["lhs"].get<double>() == doctest::Approx(0.9595173757).epsilon(1e-8));
}

TEST_CASE("cli: verify --all passes on a correct build") {
  CliRun r = run_cli({"verify", "--all"});
  CHECK(r.code == 0);
  CHECK(r.out.find("failed 0") != std::string::npos);
  CHECK(r.out.find("disputed 2") != std::string::npos);
}

TEST_CASE("cli: help") {
  CliRun r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("bernoullipoly") != std::string::npos);
}
