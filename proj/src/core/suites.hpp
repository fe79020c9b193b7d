#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rng.hpp"
#include "verify.hpp"

namespace cl8::detail {

struct SuiteContext {
  SuiteConfig cfg;
  std::map<std::string, double> tol;  // effective tolerances

  double t(const std::string& name) const { return tol.at(name); }
  long long n() const { return cfg.samples; }
  double bracket_step() const { return cfg.fd_step; }
  double push_step() const { return cfg.fd_step / 10.0; }
};

// Collects records for one suite; each check gets its own generator
// SplitMix64(seed, id) so results do not depend on scheduling.
class Recorder {
 public:
  explicit Recorder(const SuiteContext& ctx) : ctx_(ctx) {}

  /// residual <= tolerance.
  void upper(const std::string& id, const std::string& claim, double tolerance, long long samples,
             const std::function<double(SplitMix64&)>& fn, long long extra_ms = 0);
  /// Number of failing cases must be zero.
  void exact(const std::string& id, const std::string& claim, long long samples,
             const std::function<long long(SplitMix64&)>& fn, long long extra_ms = 0);
  /// observed >= bound, reported as residual bound / observed against tolerance 1.
  void lower(const std::string& id, const std::string& claim, double bound, long long samples,
             const std::function<double(SplitMix64&)>& fn, long long extra_ms = 0);

  const SuiteContext& ctx() const { return ctx_; }
  std::vector<CheckRecord> take() { return std::move(records_); }

 private:
  void run(CheckRecord rec, const std::function<void(CheckRecord&, SplitMix64&)>& body, long long extra_ms);

  const SuiteContext& ctx_;
  std::vector<CheckRecord> records_;
};

/// Wall-clock milliseconds spent in fn.
long long timed_ms(const std::function<void()>& fn);

std::vector<CheckRecord> suite_clifford(const SuiteContext& ctx);
std::vector<CheckRecord> suite_spin_rep(const SuiteContext& ctx);
std::vector<CheckRecord> suite_twistor(const SuiteContext& ctx);
std::vector<CheckRecord> suite_s4_twistor(const SuiteContext& ctx);
std::vector<CheckRecord> suite_kahler(const SuiteContext& ctx);
std::vector<CheckRecord> suite_submersion(const SuiteContext& ctx);
std::vector<CheckRecord> suite_s6_sections(const SuiteContext& ctx);

}  // namespace cl8::detail
