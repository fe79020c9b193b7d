#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "spinor.hpp"
#include "verify.hpp"

using namespace cl8;
using testing::error_code_of;

namespace {

SuiteConfig quick(const std::string& suite) {
  SuiteConfig c;
  c.suite = suite;
  c.samples = 5;
  return c;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("configuration validation") {
    CHECK(error_code_of([] { validate(SuiteConfig{}); }) == static_cast<ErrorCode>(0));
    auto bad = [](auto edit) {
      SuiteConfig c;
      edit(c);
      return error_code_of([&] { validate(c); });
    };
    CHECK(bad([](SuiteConfig& c) { c.suite = "nope"; }) == ErrorCode::Config);
    CHECK(bad([](SuiteConfig& c) { c.samples = 0; }) == ErrorCode::Config);
    CHECK(bad([](SuiteConfig& c) { c.fd_step = 0.1; }) == ErrorCode::Config);
    CHECK(bad([](SuiteConfig& c) { c.fd_step = 1e-12; }) == ErrorCode::Config);
    CHECK(bad([](SuiteConfig& c) { c.tolerances["bogus"] = 1.0; }) == ErrorCode::Config);
    CHECK(bad([](SuiteConfig& c) { c.tolerances["fiber"] = -1.0; }) == ErrorCode::Config);
    CHECK(bad([](SuiteConfig& c) { c.format = "xml"; }) == ErrorCode::Config);
    CHECK(bad([](SuiteConfig& c) { c.section = "nope"; }) != static_cast<ErrorCode>(0));
    for (const auto& s : suite_names()) CHECK(bad([&](SuiteConfig& c) { c.suite = s; }) == static_cast<ErrorCode>(0));
  }

  TEST_CASE("reports are deterministic and sorted") {
    for (const char* s : {"clifford", "twistor", "submersion"}) {
      const Report a = run(quick(s)), b = run(quick(s));
      CHECK(report_json(a, false) == report_json(b, false));
      CHECK(std::is_sorted(a.checks.begin(), a.checks.end(),
                           [](const CheckRecord& x, const CheckRecord& y) { return x.id < y.id; }));
      CHECK(a.all_pass());
      CHECK(a.exit_code() == 0);
    }
  }

  TEST_CASE("seed changes sampled residuals") {
    SuiteConfig c = quick("twistor");
    const Report a = run(c);
    c.seed = 7;
    const Report b = run(c);
    CHECK(report_json(a, false) != report_json(b, false));
  }

  TEST_CASE("json layout") {
    const Report r = run(quick("clifford"));
    const auto j = nlohmann::json::parse(report_json(r));
    CHECK(j["header"]["seeds"]["master"] == 42);
    CHECK(j["header"]["seeds"]["generator"] == "SplitMix64");
    CHECK(j["header"]["not_machine_checked"].size() == 2);
    CHECK(j["checks"].size() == r.checks.size());
    for (const auto& c : j["checks"]) {
      CHECK(c["status"] == "pass");
      CHECK(c.contains("elapsed_ms"));
      CHECK(c["exact"] == true);
    }
    const auto k = nlohmann::json::parse(report_json(r, false));
    for (const auto& c : k["checks"]) CHECK_FALSE(c.contains("elapsed_ms"));
  }

  TEST_CASE("tightened tolerance fails with exit code 1") {
    SuiteConfig c = quick("twistor");
    c.tolerances["fiber"] = 1e-300;
    const Report r = run(c);
    CHECK_FALSE(r.all_pass());
    CHECK(r.exit_code() == 1);
    const auto it = std::find_if(r.checks.begin(), r.checks.end(), [](const CheckRecord& x) { return !x.pass; });
    REQUIRE(it != r.checks.end());
    CHECK(it->tolerance == 1e-300);
    CHECK(report_text(r).find("FAIL") != std::string::npos);
  }

  TEST_CASE("single section selection") {
    SuiteConfig c = quick("s6-sections");
    c.section = "canonical";
    const Report r = run(c);
    CHECK(r.all_pass());
    for (const auto& x : r.checks) CHECK(x.id.rfind("s6-sections.canonical.", 0) == 0);
  }

  TEST_CASE("scan writes a header and one row per sample") {
    std::ostringstream out;
    scan_s6("canonical", 3, 0, 1e-4, out);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "v1,v2,v3,v4,v5,v6,v7,v8,holo_defect,nijenhuis_max");
    int rows = 0;
    while (std::getline(in, line)) {
      ++rows;
      CHECK(std::count(line.begin(), line.end(), ',') == 9);
      CHECK(line.rfind("0,", 0) == 0);
    }
    CHECK(rows == 3);
    std::ostringstream again;
    scan_s6("canonical", 3, 0, 1e-4, again);
    CHECK(again.str() == out.str());
    std::ostringstream sink;
    CHECK(error_code_of([&] { scan_s6("nope", 1, 0, 1e-4, sink); }) == ErrorCode::UnknownSection);
  }

  TEST_CASE("golden block literal") {
    const auto& g = golden_p_e2();
    CHECK(g[0][1] == 1);
    CHECK(g[1][0] == -1);
    CHECK(g[2][3] == -1);
    CHECK(g[3][2] == 1);
    CHECK(g[7][6] == 1);
    int nonzero = 0;
    for (const auto& row : g)
      for (int x : row) nonzero += x != 0;
    CHECK(nonzero == 8);
  }
}
