// cl8: verification and evaluation front end over the C API.
#include <cl8/cl8.h>

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitInternal = 3;

int status_exit(cl8_status s) {
  switch (s) {
    case CL8_ERR_PARSE:
    case CL8_ERR_CONFIG:
    case CL8_ERR_UNKNOWN_SECTION:
    case CL8_ERR_INVALID_ARGUMENT:
      return kExitConfig;
    default:
      return kExitInternal;
  }
}

int report_failure(cl8_status s) {
  std::cerr << "cl8: " << cl8_last_error() << "\n";
  return status_exit(s);
}

std::string take(char* s) {
  std::string out(s);
  cl8_string_free(s);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cl_8 spin representation and twistor geometry verifier"};
  app.set_version_flag("--version", std::string(cl8_version()));
  app.require_subcommand(1);

  std::string suite = "all";
  std::uint64_t seed = 42;
  long long samples = 50;
  double fd_step = 1e-4;
  std::vector<std::string> tols;
  std::string format = "text";
  std::string section = "all";
  bool no_timings = false;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", suite, "clifford, spin-rep, twistor, s4-twistor, kahler, submersion, s6-sections or all")
      ->required();
  verify->add_option("--seed", seed, "master seed");
  verify->add_option("--samples", samples, "samples per check");
  verify->add_option("--fd-step", fd_step, "finite-difference step for brackets (pushes use a tenth of it)");
  verify->add_option("--tol", tols, "override a tolerance, name=value (repeatable)");
  verify->add_option("--format", format, "text or json");
  verify->add_option("--section", section, "section for s6-sections, or all");
  verify->add_flag("--no-timings", no_timings, "omit elapsed_ms from JSON output");

  std::string scan_section;
  long long scan_samples = 0;
  std::string scan_out;
  std::uint64_t scan_seed = 0;
  double scan_step = 1e-4;
  auto* scan = app.add_subcommand("scan-s6", "write holo_defect and Nijenhuis norms over S^6 as CSV");
  scan->add_option("--section", scan_section, "section name")->required();
  scan->add_option("--samples", scan_samples, "number of points")->required();
  scan->add_option("--out", scan_out, "output CSV path")->required();
  scan->add_option("--seed", scan_seed, "shift of the point sequence (0 = unshifted)");
  scan->add_option("--fd-step", scan_step, "finite-difference step for brackets");

  std::string expr;
  auto* eval = app.add_subcommand("eval", "evaluate an exact expression");
  eval->add_option("expr", expr, "expression, e.g. \"rep(e1*e2)\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (verify->parsed()) {
    nlohmann::json cfg = {{"suite", suite}, {"seed", seed},     {"samples", samples},       {"fd_step", fd_step},
                          {"format", format}, {"section", section}, {"timings", !no_timings}};
    std::map<std::string, double> overrides;
    for (const std::string& t : tols) {
      const auto eq = t.find('=');
      if (eq == std::string::npos || eq == 0) {
        std::cerr << "cl8: --tol expects name=value, got '" << t << "'\n";
        return kExitConfig;
      }
      try {
        std::size_t used = 0;
        const std::string num = t.substr(eq + 1);
        const double v = std::stod(num, &used);
        if (used != num.size()) throw std::invalid_argument(num);
        overrides[t.substr(0, eq)] = v;
      } catch (const std::exception&) {
        std::cerr << "cl8: bad tolerance value in '" << t << "'\n";
        return kExitConfig;
      }
    }
    cfg["tolerances"] = overrides;
    char* report = nullptr;
    int code = 0;
    const cl8_status s = cl8_verify(cfg.dump().c_str(), &report, &code);
    if (s != CL8_OK) return report_failure(s);
    std::cout << take(report);
    return code;
  }

  if (scan->parsed()) {
    const cl8_status s = cl8_scan_s6(scan_section.c_str(), scan_samples, scan_seed, scan_step, scan_out.c_str());
    if (s != CL8_OK) return report_failure(s);
    return 0;
  }

  char* out = nullptr;
  const cl8_status s = cl8_eval(expr.c_str(), &out);
  if (s != CL8_OK) return report_failure(s);
  std::cout << take(out);
  return 0;
}
