#include "zetasum/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "zetasum/engines.hpp"
#include "zetasum/quadrature.hpp"
#include "zetasum/special_functions.hpp"

namespace zetasum::cli {

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

const char* status_name(IdentityStatus s) {
  return s == IdentityStatus::disputed ? "disputed" : "claimed";
}

struct EvalSpec {
  int arity;
  std::function<Approximation(const std::vector<double>&)> fn;
};

const std::map<std::string, EvalSpec>& eval_table() {
  static const std::map<std::string, EvalSpec> table = {
      {"Si", {1, [](const auto& a) { return sine_integral_Si(a[0]); }}},
      {"si", {1, [](const auto& a) { return sine_integral_si(a[0]); }}},
      {"Ci", {1, [](const auto& a) { return cosine_integral_Ci(a[0]); }}},
      {"psi", {1, [](const auto& a) { return digamma(a[0]); }}},
      {"polygamma",
       {2, [](const auto& a) {
          return polygamma(static_cast<int>(a[0]), a[1]);
        }}},
      {"loggamma", {1, [](const auto& a) { return log_gamma(a[0]); }}},
      {"logbarnesg", {1, [](const auto& a) { return log_barnes_g(a[0]); }}},
      {"hurwitz",
       {2, [](const auto& a) { return hurwitz_zeta_deriv(0, a[0], a[1]); }}},
      {"hurwitzd1",
       {2, [](const auto& a) { return hurwitz_zeta_deriv(1, a[0], a[1]); }}},
      {"hurwitzd2",
       {2, [](const auto& a) { return hurwitz_zeta_deriv(2, a[0], a[1]); }}},
      {"stieltjes",
       {2, [](const auto& a) {
          return stieltjes_gamma(static_cast<int>(a[0]), a[1]);
        }}},
      {"bernoullipoly",
       {2, [](const auto& a) {
          return Approximation{bernoulli_poly(static_cast<int>(a[0]), a[1]),
                               0.0, 1};
        }}},
  };
  return table;
}

int run_eval(const std::string& fn, const std::vector<double>& args,
             ReportFormat format, std::ostream& out, std::ostream& err) {
  auto it = eval_table().find(fn);
  if (it == eval_table().end()) {
    err << "eval: unknown function '" << fn
        << "'; see --help for the vocabulary\n";
    return 2;
  }
  if (static_cast<int>(args.size()) != it->second.arity) {
    err << "eval: " << fn << " takes " << it->second.arity << " argument(s)\n";
    return 2;
  }
  Approximation r;
  try {
    r = it->second.fn(args);
  } catch (const std::exception& e) {
    err << "eval: " << e.what() << "\n";
    return 2;
  }
  if (format == ReportFormat::json) {
    out << "{\"fn\":\"" << json_escape(fn) << "\",\"args\":[";
    for (size_t i = 0; i < args.size(); ++i) {
      out << (i ? "," : "") << format_double(args[i]);
    }
    out << "],\"value\":" << format_double(r.value)
        << ",\"abs_err\":" << format_double(r.abs_err) << ",\"work\":" << r.work
        << "}\n";
  } else {
    out << format_double(r.value) << "\n";
  }
  return 0;
}

void print_engine_report(const EngineReport& rep, ReportFormat format,
                         std::ostream& out) {
  if (format == ReportFormat::json) {
    out << "{\"lhs\":" << format_double(rep.lhs.value)
        << ",\"rhs\":" << format_double(rep.rhs.value)
        << ",\"residual\":" << format_double(rep.residual)
        << ",\"n_modes\":" << rep.n_modes << ",\"converged\":"
        << (rep.converged ? "true" : "false") << "}\n";
  } else {
    out << "lhs       = " << format_double(rep.lhs.value) << "\n"
        << "rhs       = " << format_double(rep.rhs.value) << "\n"
        << "residual  = " << format_double(rep.residual) << "\n"
        << "n_modes   = " << rep.n_modes << "\n"
        << "converged = " << (rep.converged ? "true" : "false") << "\n";
  }
}

int run_engine(const std::string& which, const std::string& preset, double tol,
               ReportFormat format, std::ostream& out, std::ostream& err) {
  EngineReport rep;
  try {
    if (which == "poisson") {
      if (preset == "exp") {
        rep = poisson_semiinf([](double x) { return std::exp(-x); }, 96, tol);
      } else if (preset == "gauss") {
        rep = poisson_semiinf(
            [](double x) { return std::exp(-kPi * x * x); }, 32, tol);
      } else if (preset == "alternating-exp") {
        rep = poisson_alternating([](double x) { return std::exp(-x); }, 48,
                                  tol);
      } else if (preset == "linear-finite") {
        rep = poisson_finite([](double x) { return x; }, 0.0, 1.0, 64, tol);
      } else {
        err << "engine poisson: unknown preset '" << preset
            << "' (exp, gauss, alternating-exp, linear-finite)\n";
        return 2;
      }
    } else if (which == "abel-plana") {
      ComplexCapableFn f;
      if (preset == "inv-square") {
        f.evaluate = [](std::complex<double> z) { return 1.0 / ((1.0 + z) * (1.0 + z)); };
        f.real_restriction = [](double x) { return 1.0 / ((1.0 + x) * (1.0 + x)); };
        rep = abel_plana(f, tol);
      } else if (preset == "exp") {
        f.evaluate = [](std::complex<double> z) { return std::exp(-z); };
        f.real_restriction = [](double x) { return std::exp(-x); };
        rep = abel_plana(f, tol);
      } else if (preset == "alternating-inv") {
        f.evaluate = [](std::complex<double> z) { return 1.0 / (1.0 + z); };
        f.real_restriction = [](double x) { return 1.0 / (1.0 + x); };
        rep = abel_plana_alternating(f, tol);
      } else if (preset == "half-exp") {
        f.evaluate = [](std::complex<double> z) { return std::exp(-z); };
        f.real_restriction = [](double x) { return std::exp(-x); };
        rep = abel_plana_halfinteger(f, tol);
      } else {
        err << "engine abel-plana: unknown preset '" << preset
            << "' (inv-square, exp, alternating-inv, half-exp)\n";
        return 2;
      }
    } else {
      err << "engine: unknown engine '" << which << "' (poisson, abel-plana)\n";
      return 2;
    }
  } catch (const std::exception& e) {
    err << "engine: " << e.what() << "\n";
    return 1;
  }
  print_engine_report(rep, format, out);
  return rep.converged ? 0 : 1;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::string format_report(const std::vector<VerificationResult>& results,
                          ReportFormat format) {
  std::ostringstream os;
  if (format == ReportFormat::json) {
    for (const auto& r : results) {
      os << "{\"id\":\"" << json_escape(r.id) << "\""
         << ",\"lhs\":" << format_double(r.lhs_value)
         << ",\"rhs\":" << format_double(r.rhs_value)
         << ",\"abs_diff\":" << format_double(r.abs_diff)
         << ",\"rel_diff\":" << format_double(r.rel_diff) << ",\"passed\":";
      if (r.passed.has_value()) {
        os << (*r.passed ? "true" : "false");
      } else {
        os << "null";
      }
      os << ",\"status\":\"" << status_name(r.status) << "\""
         << ",\"elapsed_ms\":" << format_double(r.elapsed_ms)
         << ",\"notes\":\"" << json_escape(r.notes) << "\"}\n";
    }
    return os.str();
  }
  // Aligned text table.
  size_t idw = 2;
  for (const auto& r : results) idw = std::max(idw, r.id.size());
  char line[256];
  std::snprintf(line, sizeof line, "%-*s  %-8s  %22s  %22s  %10s  %-6s  %8s\n",
                static_cast<int>(idw), "id", "status", "lhs", "rhs",
                "abs_diff", "result", "ms");
  os << line;
  for (const auto& r : results) {
    const char* verdict = !r.passed.has_value() ? "DISP"
                          : (*r.passed ? "PASS" : "FAIL");
    std::snprintf(line, sizeof line,
                  "%-*s  %-8s  %22.15g  %22.15g  %10.3g  %-6s  %8.1f\n",
                  static_cast<int>(idw), r.id.c_str(), status_name(r.status),
                  r.lhs_value, r.rhs_value, r.abs_diff, verdict, r.elapsed_ms);
    os << line;
  }
  VerificationSummary s = summarize(results);
  os << "passed " << s.passed << " / failed " << s.failed << " / disputed "
     << s.disputed << "\n";
  return os.str();
}

int run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"zetasum: special-function library and verification CLI for "
               "classical series and integral identities"};
  app.fallthrough(true);

  double tol = std::numeric_limits<double>::quiet_NaN();
  long max_terms = 20000;
  long quad_budget = 200000;
  std::string format_name = "text";
  bool parallel = false;
  app.add_option("--tol", tol, "tolerance override for verification");
  app.add_option("--max-terms", max_terms, "series term budget (>= 16)");
  app.add_option("--quad-budget", quad_budget,
                 "integrand evaluation budget per integral (>= 1000)");
  app.add_option("--format", format_name, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--parallel", parallel, "verify entries on worker threads");

  auto* eval_cmd = app.add_subcommand(
      "eval", "evaluate a special function: eval <fn> <args...>; fn is one of "
              "Si si Ci psi polygamma loggamma logbarnesg hurwitz hurwitzd1 "
              "hurwitzd2 stieltjes bernoullipoly");
  std::string eval_fn;
  std::vector<double> eval_args;
  eval_cmd->add_option("fn", eval_fn, "function name")->required();
  eval_cmd->add_option("args", eval_args, "numeric arguments");

  auto* verify_cmd =
      app.add_subcommand("verify", "verify catalog identities");
  bool verify_all_flag = false;
  std::string verify_id, verify_filter;
  verify_cmd->add_flag("--all", verify_all_flag, "verify every entry");
  verify_cmd->add_option("--id", verify_id, "verify a single entry");
  verify_cmd->add_option("--filter", verify_filter,
                         "verify entries whose id starts with PREFIX");

  auto* list_cmd = app.add_subcommand("list", "print the registry manifest");

  auto* engine_cmd = app.add_subcommand(
      "engine", "run a summation engine preset: engine <poisson|abel-plana> "
                "--preset <name>");
  std::string engine_which, engine_preset;
  engine_cmd->add_option("which", engine_which, "poisson or abel-plana")
      ->required();
  engine_cmd->add_option("--preset", engine_preset, "preset name")->required();

  std::vector<const char*> cargv;
  cargv.push_back("zetasum");
  for (const auto& s : argv) cargv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  if (max_terms < 16) {
    err << "--max-terms must be >= 16\n";
    return 2;
  }
  if (quad_budget < 1000) {
    err << "--quad-budget must be >= 1000\n";
    return 2;
  }
  set_default_max_terms(max_terms);
  set_default_quad_budget(quad_budget);
  ReportFormat format =
      format_name == "json" ? ReportFormat::json : ReportFormat::text;
  std::optional<double> tol_override;
  if (!std::isnan(tol)) tol_override = tol;

  if (app.get_subcommands().empty()) {
    err << "a subcommand is required\n" << app.help();
    return 2;
  }

  if (eval_cmd->parsed()) {
    return run_eval(eval_fn, eval_args, format, out, err);
  }
  if (list_cmd->parsed()) {
    if (format == ReportFormat::json) {
      for (const auto& r : list_identities()) {
        out << "{\"id\":\"" << json_escape(r.id) << "\",\"status\":\""
            << status_name(r.status) << "\",\"tol\":" << format_double(r.tol)
            << ",\"points\":" << r.checks.size() << ",\"description\":\""
            << json_escape(r.description) << "\",\"citation\":\""
            << json_escape(r.citation) << "\"}\n";
      }
    } else {
      out << registry_manifest();
    }
    return 0;
  }
  if (verify_cmd->parsed()) {
    std::vector<VerificationResult> results;
    try {
      if (!verify_id.empty()) {
        results.push_back(verify_identity(verify_id, tol_override));
      } else {
        results = verify_all(verify_filter, parallel, tol_override);
      }
    } catch (const std::exception& e) {
      err << "verify: " << e.what() << "\n";
      return 2;
    }
    out << format_report(results, format);
    return summarize(results).failed == 0 ? 0 : 1;
  }
  if (engine_cmd->parsed()) {
    double engine_tol = std::isnan(tol) ? 1e-9 : tol;
    return run_engine(engine_which, engine_preset, engine_tol, format, out,
                      err);
  }
  err << "a subcommand is required\n" << app.help();
  return 2;
}

}  // namespace zetasum::cli
