// Acceptance run: one PASS/FAIL line per criterion.
// usage: acceptance <path to cl8 cli> <path to README.md>
#include <cl8/cl8.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

using nlohmann::ordered_json;

namespace {

struct Run {
  ordered_json report;
  double wall_ms = 0.0;
  int exit_code = -1;
  std::string error;
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

Run verify(const std::string& suite, int samples, const std::string& section = "all") {
  const ordered_json cfg = {{"suite", suite}, {"seed", 42}, {"samples", samples}, {"format", "json"}, {"section", section}};
  Run r;
  char* out = nullptr;
  const auto t0 = std::chrono::steady_clock::now();
  const cl8_status s = cl8_verify(cfg.dump().c_str(), &out, &r.exit_code);
  r.wall_ms = ms_since(t0);
  if (s != CL8_OK) {
    r.error = cl8_last_error();
    return r;
  }
  r.report = ordered_json::parse(out);
  cl8_string_free(out);
  return r;
}

class Criterion {
 public:
  Criterion(int n, std::string title) : n_(n), title_(std::move(title)) {}

  // Requires the named record to be present and passing.
  void record(const Run& run, const std::string& id) {
    if (!run.error.empty()) return fail("verify failed: " + run.error);
    for (const auto& c : run.report["checks"]) {
      if (c["id"] != id) continue;
      std::ostringstream s;
      s << id << " residual=" << (c["residual"].is_null() ? std::string("nan") : c["residual"].dump())
        << " tol=" << c["tolerance"].dump();
      if (c["status"] != "pass") return fail(s.str());
      notes_.push_back(s.str());
      return;
    }
    fail("missing record " + id);
  }

  double elapsed(const Run& run, const std::string& id) const {
    for (const auto& c : run.report["checks"])
      if (c["id"] == id) return c["elapsed_ms"].get<double>();
    return 1e300;
  }

  void require(bool ok, const std::string& what) {
    if (ok) notes_.push_back(what);
    else fail(what);
  }

  void fail(const std::string& why) {
    ok_ = false;
    notes_.push_back("FAILED: " + why);
  }

  bool print() const {
    std::cout << (ok_ ? "PASS" : "FAIL") << " criterion " << n_ << ": " << title_ << "\n";
    for (const auto& s : notes_) std::cout << "    " << s << "\n";
    return ok_;
  }

 private:
  int n_;
  std::string title_;
  bool ok_ = true;
  std::vector<std::string> notes_;
};

std::string ms(double v) {
  std::ostringstream s;
  s.precision(1);
  s << std::fixed << v << " ms";
  return s.str();
}

// Runs the CLI and captures stdout.
bool capture(const std::string& cmd, std::string& out, int& code) {
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return false;
  char buf[4096];
  std::size_t n;
  out.clear();
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int st = pclose(p);
  code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return true;
}

ordered_json strip_timings(ordered_json j) {
  for (auto& c : j["checks"]) c.erase("elapsed_ms");
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <cl8 cli> <README.md>\n";
    return 2;
  }
  const std::string cli = argv[1], readme = argv[2];
  bool all = true;

  {
    Criterion c(1, "Clifford relations hold exactly for all 64 generator pairs in under 1 s");
    const Run r = verify("clifford", 64);
    c.record(r, "clifford.anticommutation");
    c.require(c.elapsed(r, "clifford.anticommutation") < 1000.0, "runtime " + ms(c.elapsed(r, "clifford.anticommutation")));
    all &= c.print();
  }

  const Run spin = verify("spin-rep", 100);
  {
    Criterion c(2, "alpha coordinates have rank 16 and 100 random x A lie in their span exactly, in under 10 s");
    c.record(spin, "spin-rep.alpha_rank");
    c.record(spin, "spin-rep.ideal_membership");
    const double t = c.elapsed(spin, "spin-rep.alpha_rank") + c.elapsed(spin, "spin-rep.ideal_membership");
    c.require(t < 10000.0, "runtime " + ms(t));
    all &= c.print();
  }
  {
    Criterion c(3, "Phi is multiplicative and intertwines alpha(x^t) with transpose on 200 pairs, blade images have rank 256, in under 60 s");
    c.record(spin, "spin-rep.homomorphism");
    c.record(spin, "spin-rep.transpose");
    c.record(spin, "spin-rep.injectivity");
    const double t = c.elapsed(spin, "spin-rep.homomorphism") + c.elapsed(spin, "spin-rep.transpose") +
                     c.elapsed(spin, "spin-rep.injectivity");
    c.require(t < 60000.0, "runtime " + ms(t));
    all &= c.print();
  }
  {
    Criterion c(4, "upper-left 8x8 block of Phi(e1 e2) equals the golden P_e2 entry for entry");
    c.record(spin, "spin-rep.golden_block");
    all &= c.print();
  }
  {
    Criterion c(5, "Phi* is orthogonal with square -I on 200 planes, distinct planes give distinct structures");
    const Run r = verify("twistor", 200);
    c.record(r, "twistor.phi_star_orthogonal");
    c.record(r, "twistor.phi_star_square");
    c.record(r, "twistor.distinct_planes");
    all &= c.print();
  }
  {
    Criterion c(6, "tau(fiber_point(v, u)) = v and Phi* preserves span{e1, v} over 100 samples");
    const Run r = verify("twistor", 100);
    c.record(r, "twistor.fibration");
    c.record(r, "twistor.span_invariance");
    all &= c.print();
  }
  {
    Criterion c(7, "theta family maps to cos(t) e4 + sin(t) e6, spinor identity and S^4 invariance over 20 x 10 samples");
    const Run r = verify("s4-twistor", 200);
    c.record(r, "s4-twistor.theta_fiber");
    c.record(r, "s4-twistor.spinor_identity");
    c.record(r, "s4-twistor.invariance");
    all &= c.print();
  }
  {
    Criterion c(8, "Nijenhuis tensor and d omega of G(2,8) vanish at h = 1e-4 over 50 samples, shrinking >= 3x on halving h, in under 2 min");
    const Run r = verify("kahler", 50);
    c.record(r, "kahler.nijenhuis");
    c.record(r, "kahler.d_omega");
    c.record(r, "kahler.nijenhuis_bent");
    c.record(r, "kahler.d_omega_bent");
    c.record(r, "kahler.convergence");
    c.require(r.wall_ms < 120000.0, "runtime " + ms(r.wall_ms));
    all &= c.print();
  }
  const Run sub = verify("submersion", 100);
  {
    Criterion c(9, "tau is an isometry on horizontal vectors and kills vertical ones over 100 points");
    c.record(sub, "submersion.horizontal_isometry");
    c.record(sub, "submersion.vertical_kernel");
    all &= c.print();
  }
  {
    Criterion c(10, "diagram commutes and J~ preserves H and V over 100 samples");
    c.record(sub, "submersion.diagram");
    c.record(sub, "submersion.hv_preservation");
    all &= c.print();
  }
  {
    Criterion c(11, "canonical section has holo_defect > 0.05 and Nijenhuis > 1e-2 at >= 95% of 200 points, Richardson limits away from 0, verdicts agree for all shipped sections");
    const Run r = verify("s6-sections", 200);
    c.record(r, "s6-sections.canonical.defect_positive");
    c.record(r, "s6-sections.canonical.nijenhuis_positive");
    c.record(r, "s6-sections.canonical.richardson");
    c.record(r, "s6-sections.canonical.verdict_agreement");
    c.record(r, "s6-sections.perturbed.verdict_agreement");
    all &= c.print();
  }
  {
    Criterion c(12, "cohomological statements are recorded as not machine-checked");
    const Run r = verify("clifford", 1);
    const auto& nm = r.report["header"]["not_machine_checked"];
    c.require(nm.is_array() && nm.size() == 2, "report header lists " + std::to_string(nm.size()) + " not machine-checked statements");
    std::ifstream in(readme);
    std::stringstream doc;
    doc << in.rdbuf();
    c.require(doc.str().find("## Not machine-checked") != std::string::npos, "README has a not machine-checked section");
    all &= c.print();
  }
  {
    Criterion c(13, "verify all --seed 42 --samples 50 --format json is reproducible, each run under 5 min");
    const std::string cmd = "\"" + cli + "\" verify all --seed 42 --samples 50 --format json";
    std::string a, b;
    int ca = -1, cb = -1;
    auto t0 = std::chrono::steady_clock::now();
    const bool ok_a = capture(cmd, a, ca);
    const double ta = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    const bool ok_b = capture(cmd, b, cb);
    const double tb = ms_since(t0);
    c.require(ok_a && ok_b && ca == 0 && cb == 0, "cli exit codes " + std::to_string(ca) + ", " + std::to_string(cb));
    if (ok_a && ok_b && ca == 0 && cb == 0) {
      const auto ja = strip_timings(ordered_json::parse(a)), jb = strip_timings(ordered_json::parse(b));
      c.require(ja == jb, "reports identical apart from elapsed_ms (" + std::to_string(ja["checks"].size()) + " checks)");
    }
    c.require(ta < 300000.0 && tb < 300000.0, "wall clock " + ms(ta) + ", " + ms(tb));
    all &= c.print();
  }

  std::cout << (all ? "all acceptance criteria passed" : "some acceptance criteria failed") << "\n";
  return all ? 0 : 1;
}
