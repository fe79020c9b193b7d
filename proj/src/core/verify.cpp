#include "verify.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <future>
#include "json.hpp"
#include <sstream>

#include "error.hpp"
#include "sampling.hpp"
#include "sections.hpp"
#include "suites.hpp"
#include "version.hpp"

namespace cl8 {

const int (&golden_p_e2())[8][8] {
  static const int m[8][8] = {
      {0, 1, 0, 0, 0, 0, 0, 0},  {-1, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, 1, 0, 0, 0},  {0, 0, 0, 0, 0, 0, 0, -1}, {0, 0, 0, 0, 0, 0, 1, 0},
  };
  return m;
}

namespace detail {

long long timed_ms(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
}

void Recorder::run(CheckRecord rec, const std::function<void(CheckRecord&, SplitMix64&)>& body, long long extra_ms) {
  SplitMix64 rng(ctx_.cfg.seed, rec.id);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(rec, rng);
    rec.pass = rec.residual <= rec.tolerance;  // NaN fails
  } catch (const Error& e) {
    rec.pass = false;
    rec.error = e.what();
    rec.internal_error = e.code() == ErrorCode::Internal;
    rec.residual = std::numeric_limits<double>::quiet_NaN();
  } catch (const std::exception& e) {
    rec.pass = false;
    rec.error = e.what();
    rec.internal_error = true;
    rec.residual = std::numeric_limits<double>::quiet_NaN();
  }
  rec.elapsed_ms =
      extra_ms + std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  records_.push_back(std::move(rec));
}

void Recorder::upper(const std::string& id, const std::string& claim, double tolerance, long long samples,
                     const std::function<double(SplitMix64&)>& fn, long long extra_ms) {
  CheckRecord r;
  r.id = id;
  r.claim = claim;
  r.tolerance = tolerance;
  r.samples = samples;
  run(std::move(r), [&](CheckRecord& rec, SplitMix64& rng) { rec.residual = fn(rng); }, extra_ms);
}

void Recorder::exact(const std::string& id, const std::string& claim, long long samples,
                     const std::function<long long(SplitMix64&)>& fn, long long extra_ms) {
  CheckRecord r;
  r.id = id;
  r.claim = claim;
  r.tolerance = 0.0;
  r.exact = true;
  r.samples = samples;
  run(std::move(r), [&](CheckRecord& rec, SplitMix64& rng) { rec.residual = static_cast<double>(fn(rng)); }, extra_ms);
}

void Recorder::lower(const std::string& id, const std::string& claim, double bound, long long samples,
                     const std::function<double(SplitMix64&)>& fn, long long extra_ms) {
  CheckRecord r;
  r.id = id;
  r.claim = claim;
  r.tolerance = 1.0;
  r.bound = bound;
  r.samples = samples;
  run(std::move(r),
      [&](CheckRecord& rec, SplitMix64& rng) {
        const double obs = fn(rng);
        rec.observed = obs;
        rec.residual = obs > 0.0 ? bound / obs : std::numeric_limits<double>::infinity();
      },
      extra_ms);
}

}  // namespace detail

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"clifford", "spin-rep", "twistor", "s4-twistor",
                                                 "kahler",   "submersion", "s6-sections"};
  return names;
}

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> t = {
      {"phi_star", 1e-9},       {"distinct", 1e-6},      {"fiber", 1e-8},       {"span", 1e-8},
      {"cross", 1e-9},          {"tau1", 1e-8},          {"spinor_identity", 1e-9}, {"s4", 1e-8},
      {"nijenhuis", 1e-4},      {"d_omega", 1e-3},       {"convergence_ratio", 3.0}, {"metric", 1e-9},
      {"isometry", 1e-6},       {"vertical", 1e-9},      {"diagram", 1e-8},     {"hv", 1e-8},
      {"section", 1e-8},        {"acs", 1e-6},           {"defect_min", 0.05},  {"nijenhuis_min", 1e-2},
      {"fraction", 0.95},       {"eps_fd", 1e-4},        {"eps_sig", 1e-2},
  };
  return t;
}

namespace {

std::map<std::string, double> effective_tolerances(const SuiteConfig& cfg) {
  std::map<std::string, double> t = default_tolerances();
  for (const auto& [k, v] : cfg.tolerances) t[k] = v;
  return t;
}

std::vector<std::string> selected_suites(const SuiteConfig& cfg) {
  if (cfg.suite == "all") return suite_names();
  return {cfg.suite};
}

std::vector<CheckRecord> run_suite(const std::string& name, const detail::SuiteContext& ctx) {
  if (name == "clifford") return detail::suite_clifford(ctx);
  if (name == "spin-rep") return detail::suite_spin_rep(ctx);
  if (name == "twistor") return detail::suite_twistor(ctx);
  if (name == "s4-twistor") return detail::suite_s4_twistor(ctx);
  if (name == "kahler") return detail::suite_kahler(ctx);
  if (name == "submersion") return detail::suite_submersion(ctx);
  if (name == "s6-sections") return detail::suite_s6_sections(ctx);
  fail(ErrorCode::Config, "unknown suite '" + name + "'");
}

std::string shortest(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

}  // namespace

void validate(const SuiteConfig& cfg) {
  const auto& names = suite_names();
  if (cfg.suite != "all" && std::find(names.begin(), names.end(), cfg.suite) == names.end()) {
    fail(ErrorCode::Config, "unknown suite '" + cfg.suite + "'");
  }
  if (cfg.samples < 1) fail(ErrorCode::Config, "samples must be at least 1");
  if (!(cfg.fd_step > 1e-9 && cfg.fd_step < 1e-2)) fail(ErrorCode::Config, "fd-step must lie in (1e-9, 1e-2)");
  for (const auto& [k, v] : cfg.tolerances) {
    if (!default_tolerances().contains(k)) fail(ErrorCode::Config, "unknown tolerance '" + k + "'");
    if (!(v > 0.0) || !std::isfinite(v)) fail(ErrorCode::Config, "tolerance '" + k + "' must be positive");
  }
  if (cfg.format != "text" && cfg.format != "json") fail(ErrorCode::Config, "format must be text or json");
  if (cfg.section != "all" && !SectionRegistry::global().contains(cfg.section)) {
    fail(ErrorCode::Config, "unknown section '" + cfg.section + "'");
  }
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& r) { return r.pass; });
}

int Report::exit_code() const {
  if (std::any_of(checks.begin(), checks.end(), [](const CheckRecord& r) { return r.internal_error; })) return 3;
  return all_pass() ? 0 : 1;
}

Report run(const SuiteConfig& cfg) {
  validate(cfg);
  detail::SuiteContext ctx{cfg, effective_tolerances(cfg)};
  std::vector<std::future<std::vector<CheckRecord>>> jobs;
  for (const std::string& s : selected_suites(cfg)) {
    jobs.push_back(std::async(std::launch::async, [s, &ctx] { return run_suite(s, ctx); }));
  }
  Report rep;
  rep.config = cfg;
  for (auto& j : jobs) {
    auto recs = j.get();
    rep.checks.insert(rep.checks.end(), std::make_move_iterator(recs.begin()), std::make_move_iterator(recs.end()));
  }
  std::sort(rep.checks.begin(), rep.checks.end(), [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  return rep;
}

std::string report_json(const Report& r, bool with_timings) {
  using json = nlohmann::ordered_json;
  auto number_or_null = [](double x) { return std::isfinite(x) ? json(x) : json(nullptr); };
  json header;
  header["version"] = kVersion;
  header["suite"] = r.config.suite;
  header["samples"] = r.config.samples;
  header["fd_step"] = r.config.fd_step;
  header["section"] = r.config.section;
  header["seeds"] = {{"master", r.config.seed},
                     {"generator", "SplitMix64"},
                     {"stream", "state0 = seed xor fnv1a64(check id); normals by Box-Muller"}};
  header["tolerances"] = effective_tolerances(r.config);
  header["default_tolerances"] = default_tolerances();
  header["not_machine_checked"] = {
      "Cohomological consequences about CP^3 fibres (cup products in H*(CP^3; Z)) are documented, not computed.",
      "Global nonexistence of complex structures on S^6 via H^2(S^6) = 0 is documented, not computed; the "
      "s6-sections records give pointwise numerical evidence only."};
  json checks = json::array();
  for (const CheckRecord& c : r.checks) {
    json j;
    j["id"] = c.id;
    j["status"] = c.pass ? "pass" : "fail";
    j["residual"] = number_or_null(c.residual);
    j["exact"] = c.exact;
    j["tolerance"] = c.tolerance;
    j["samples"] = c.samples;
    if (with_timings) j["elapsed_ms"] = c.elapsed_ms;
    if (c.observed) j["observed"] = number_or_null(*c.observed);
    if (c.bound) j["bound"] = *c.bound;
    j["claim"] = c.claim;
    if (!c.error.empty()) j["error"] = c.error;
    checks.push_back(std::move(j));
  }
  json out;
  out["header"] = std::move(header);
  out["checks"] = std::move(checks);
  return out.dump(2) + "\n";
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  os << "cl8 verify " << kVersion << "  suite=" << r.config.suite << " seed=" << r.config.seed
     << " samples=" << r.config.samples << " fd_step=" << shortest(r.config.fd_step) << " section=" << r.config.section
     << "\n";
  os << "prng: SplitMix64, stream state0 = seed xor fnv1a64(check id)\n";
  os << "tolerances:";
  for (const auto& [k, v] : effective_tolerances(r.config)) os << " " << k << "=" << shortest(v);
  os << "\n\n";
  std::size_t width = 0;
  for (const auto& c : r.checks) width = std::max(width, c.id.size());
  long long passed = 0;
  for (const auto& c : r.checks) {
    passed += c.pass ? 1 : 0;
    os << (c.pass ? "PASS " : "FAIL ") << c.id << std::string(width - c.id.size() + 2, ' ');
    if (c.exact) {
      os << "failures=" << static_cast<long long>(c.residual) << " (exact)";
    } else {
      os << "residual=" << shortest(c.residual) << " tol=" << shortest(c.tolerance);
      if (c.observed) os << " observed=" << shortest(*c.observed) << " bound=" << shortest(*c.bound);
    }
    os << " n=" << c.samples << " " << c.elapsed_ms << "ms";
    if (!c.error.empty()) os << "  error: " << c.error;
    os << "\n";
  }
  os << "\n" << passed << "/" << r.checks.size() << " checks passed\n";
  os << "not machine-checked: the cohomological CP^3 argument and the global S^6 nonexistence conclusion\n";
  return os.str();
}

void scan_s6(const std::string& section, long long samples, std::uint64_t seed, double fd_step, std::ostream& out) {
  if (samples < 1) fail(ErrorCode::Config, "samples must be at least 1");
  if (!(fd_step > 1e-9 && fd_step < 1e-2)) fail(ErrorCode::Config, "fd-step must lie in (1e-9, 1e-2)");
  const Section f = SectionRegistry::global().find(section);
  const S6Sequence seq(seed);
  out << "v1,v2,v3,v4,v5,v6,v7,v8,holo_defect,nijenhuis_max\n";
  for (long long k = 0; k < samples; ++k) {
    const S6Point v = seq.at(static_cast<std::uint64_t>(k));
    for (int i = 0; i < 8; ++i) out << shortest(v.vec()(i)) << ",";
    out << shortest(holo_defect(f, v, fd_step / 10.0)) << "," << shortest(nijenhuis_max(f, v, fd_step)) << "\n";
  }
}

}  // namespace cl8
