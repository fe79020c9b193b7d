#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace cl8 {

/// Which suites to run and with what sampling. fd_step is the step for bracket
/// and second-order quantities; first derivatives (section pushes) use fd_step / 10.
struct SuiteConfig {
  std::string suite = "all";
  std::uint64_t seed = 42;
  long long samples = 50;
  double fd_step = 1e-4;
  std::map<std::string, double> tolerances;  ///< overrides of default_tolerances()
  std::string format = "text";
  std::string section = "all";  ///< a registered section name, or "all" for the shipped ones
};

/// One verified claim. status is pass iff residual <= tolerance. Exact checks count
/// failing cases (tolerance 0). Lower-bound checks report bound / observed against 1.
struct CheckRecord {
  std::string id;
  std::string claim;
  bool pass = false;
  double residual = 0.0;
  double tolerance = 0.0;
  bool exact = false;
  long long samples = 0;
  long long elapsed_ms = 0;
  std::optional<double> observed;
  std::optional<double> bound;
  std::string error;  ///< set when the check threw
  bool internal_error = false;
};

struct Report {
  SuiteConfig config;
  std::vector<CheckRecord> checks;  ///< sorted by id
  bool all_pass() const;
  /// 0 all pass, 1 some check failed, 3 a check hit an internal error.
  int exit_code() const;
};

const std::vector<std::string>& suite_names();
/// Named tolerances with their built-in values.
const std::map<std::string, double>& default_tolerances();

/// Throws Error(Config) on an invalid configuration.
void validate(const SuiteConfig& cfg);
/// Runs the selected suites concurrently and collects their records sorted by id.
Report run(const SuiteConfig& cfg);

std::string report_json(const Report& r, bool with_timings = true);
std::string report_text(const Report& r);

/// Writes the CSV scan v1..v8,holo_defect,nijenhuis_max over `samples` points of
/// the deterministic S^6 sequence. Throws Error(UnknownSection).
void scan_s6(const std::string& section, long long samples, std::uint64_t seed, double fd_step, std::ostream& out);

/// The upper-left block of Phi(e1 e2), as printed with the construction.
const int (&golden_p_e2())[8][8];

}  // namespace cl8
