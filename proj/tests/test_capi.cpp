// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cl8/cl8.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

std::string take(char* s) {
  std::string out(s);
  cl8_string_free(s);
  return out;
}

cl8_mv* parse(const char* text, cl8_ring ring = CL8_RING_EXACT) {
  cl8_mv* m = nullptr;
  REQUIRE(cl8_mv_parse(text, ring, 8, &m) == CL8_OK);
  return m;
}

std::string fmt(const cl8_mv* m) {
  char* s = nullptr;
  REQUIRE(cl8_mv_format(m, &s) == CL8_OK);
  return take(s);
}

void e(int i, double out[8]) {
  for (int k = 0; k < 8; ++k) out[k] = k == i - 1 ? 1.0 : 0.0;
}

}  // namespace

TEST_CASE("version") { CHECK(std::string(cl8_version()) == "0.1.0"); }

TEST_CASE("multivector arithmetic") {
  cl8_mv* a = parse("e1");
  cl8_mv* b = parse("e2");
  cl8_mv *ab = nullptr, *ba = nullptr, *sum = nullptr, *w = nullptr, *rev = nullptr, *inv = nullptr, *g = nullptr;
  REQUIRE(cl8_mv_mul(a, b, &ab) == CL8_OK);
  REQUIRE(cl8_mv_mul(b, a, &ba) == CL8_OK);
  CHECK(fmt(ab) == "e12");
  CHECK(fmt(ba) == "-e12");
  REQUIRE(cl8_mv_add(ab, ba, &sum) == CL8_OK);
  CHECK(fmt(sum) == "0");
  REQUIRE(cl8_mv_wedge(a, b, &w) == CL8_OK);
  int eq = 0;
  REQUIRE(cl8_mv_equal(w, ab, &eq) == CL8_OK);
  CHECK(eq == 1);
  REQUIRE(cl8_mv_reverse(ab, &rev) == CL8_OK);
  CHECK(fmt(rev) == "-e12");
  REQUIRE(cl8_mv_involute(a, &inv) == CL8_OK);
  CHECK(fmt(inv) == "-e1");
  cl8_mv* mixed = parse("3 + 2*e1 + e23");
  REQUIRE(cl8_mv_grade(mixed, 1, &g) == CL8_OK);
  CHECK(fmt(g) == "2*e1");
  double ip = 0;
  REQUIRE(cl8_mv_inner(mixed, mixed, &ip) == CL8_OK);
  CHECK(ip == 14.0);
  cl8_ring ring;
  REQUIRE(cl8_mv_ring(a, &ring) == CL8_OK);
  CHECK(ring == CL8_RING_EXACT);
  for (cl8_mv* m : {a, b, ab, ba, sum, w, rev, inv, g, mixed}) cl8_mv_free(m);
}

TEST_CASE("errors set the thread's last error") {
  cl8_mv* m = nullptr;
  CHECK(cl8_mv_parse("e21", CL8_RING_EXACT, 8, &m) == CL8_ERR_PARSE);
  CHECK(m == nullptr);
  CHECK(std::string(cl8_last_error()).size() > 0);
  CHECK(cl8_mv_parse("e9", CL8_RING_EXACT, 8, &m) == CL8_ERR_PARSE);
  cl8_mv* x = parse("e1");
  cl8_mv* r = parse("0.5*e1", CL8_RING_REAL);
  cl8_mv* out = nullptr;
  CHECK(cl8_mv_mul(x, r, &out) == CL8_ERR_RING_MISMATCH);
  CHECK(cl8_mv_mul(nullptr, r, &out) == CL8_ERR_INVALID_ARGUMENT);
  cl8_mv* twelve = nullptr;
  REQUIRE(cl8_mv_parse("e12", CL8_RING_EXACT, 12, &twelve) == CL8_OK);
  CHECK(cl8_mv_add(x, twelve, &out) == CL8_ERR_GENERATOR_MISMATCH);
  char* s = nullptr;
  CHECK(cl8_rep_json(twelve, &s) != CL8_OK);
  for (cl8_mv* m2 : {x, r, twelve}) cl8_mv_free(m2);
}

TEST_CASE("eval and rep") {
  char* s = nullptr;
  REQUIRE(cl8_eval("e1*e1", &s) == CL8_OK);
  CHECK(take(s) == "-1\n");
  REQUIRE(cl8_eval("(e1+e2)^(e1-e2)", &s) == CL8_OK);
  CHECK(take(s) == "-2*e12\n");
  CHECK(cl8_eval("e1 +", &s) == CL8_ERR_PARSE);
  cl8_mv* m = parse("e12");
  REQUIRE(cl8_rep_json(m, &s) == CL8_OK);
  const auto j = nlohmann::json::parse(take(s));
  REQUIRE(j.size() == 16);
  CHECK(j[0][1] == "1");
  CHECK(j[1][0] == "-1");
  CHECK(j[2][3] == "-1");
  cl8_mv_free(m);
}

TEST_CASE("real vectors") {
  const double v[8] = {0, 0.6, 0.8, 0, 0, 0, 0, 0};
  cl8_mv* m = nullptr;
  REQUIRE(cl8_mv_from_vector(v, &m) == CL8_OK);
  cl8_ring ring;
  REQUIRE(cl8_mv_ring(m, &ring) == CL8_OK);
  CHECK(ring == CL8_RING_REAL);
  cl8_mv* sq = nullptr;
  REQUIRE(cl8_mv_mul(m, m, &sq) == CL8_OK);
  double ip = 0;
  cl8_mv* one = parse("1", CL8_RING_REAL);
  REQUIRE(cl8_mv_inner(sq, one, &ip) == CL8_OK);
  CHECK(ip == doctest::Approx(-1.0));
  for (cl8_mv* x : {m, sq, one}) cl8_mv_free(x);
}

TEST_CASE("geometry calls") {
  double u[8], w[8], J[64];
  e(1, u);
  e(2, w);
  REQUIRE(cl8_phi_star(u, w, J) == CL8_OK);
  CHECK(J[0 * 8 + 1] == doctest::Approx(1.0));
  CHECK(J[1 * 8 + 0] == doctest::Approx(-1.0));
  CHECK(J[2 * 8 + 3] == doctest::Approx(-1.0));
  double v[8];
  REQUIRE(cl8_tau(u, w, v) == CL8_OK);
  CHECK(v[1] == doctest::Approx(1.0));
  double x[8], fu[8], fw[8], back[8];
  e(3, x);
  e(5, u);
  REQUIRE(cl8_fiber_point(x, u, fu, fw) == CL8_OK);
  REQUIRE(cl8_tau(fu, fw, back) == CL8_OK);
  for (int k = 0; k < 8; ++k) CHECK(back[k] == doctest::Approx(x[k]));
  double Jv[64];
  REQUIRE(cl8_j_v(x, Jv) == CL8_OK);
  double sq = 0;
  for (int k = 0; k < 8; ++k) sq += Jv[k * 8 + 4] * Jv[k * 8 + 4];
  CHECK(sq == doctest::Approx(1.0));
  double bad[8] = {1, 0, 0, 0, 0, 0, 0, 0};
  CHECK(cl8_j_v(bad, Jv) == CL8_ERR_PRECONDITION);
  // A unit vector of V(0.3) spanned by e1 and e7.
  double a[8] = {std::cos(0.15), 0, 0, 0, 0, 0, std::sin(0.15), 0};
  REQUIRE(cl8_theta_fiber(0.3, a, fu, fw) == CL8_OK);
  double t[8];
  REQUIRE(cl8_tau1(fu, fw, t) == CL8_OK);
  CHECK(t[3] == doctest::Approx(std::cos(0.3)));
  CHECK(t[5] == doctest::Approx(std::sin(0.3)));
  e(2, a);
  CHECK(cl8_theta_fiber(0.3, a, fu, fw) == CL8_ERR_PRECONDITION);
}

namespace {

// f(v) = span{e1, v}, written through the callback interface.
void canonical_cb(const double v[8], double u[8], double w[8], void* user) {
  ++*static_cast<int*>(user);
  for (int k = 0; k < 8; ++k) {
    u[k] = k == 0 ? 1.0 : 0.0;
    w[k] = v[k];
  }
}

}  // namespace

TEST_CASE("callback sections agree with the shipped canonical section") {
  static int calls = 0;
  REQUIRE(cl8_register_section("capi-canonical", canonical_cb, &calls) == CL8_OK);
  CHECK(cl8_register_section("capi-canonical", canonical_cb, &calls) == CL8_OK);
  CHECK(cl8_register_section("canonical", canonical_cb, &calls) != CL8_OK);
  const double v[8] = {0, 0, 0.6, 0, 0.8, 0, 0, 0};
  double d1 = 0, d2 = 0, n1 = 0, n2 = 0;
  REQUIRE(cl8_holo_defect("canonical", v, 1e-5, &d1) == CL8_OK);
  REQUIRE(cl8_holo_defect("capi-canonical", v, 1e-5, &d2) == CL8_OK);
  CHECK(calls > 0);
  CHECK(d1 == doctest::Approx(d2).epsilon(1e-8));
  CHECK(d1 > 0.05);
  REQUIRE(cl8_nijenhuis_max("canonical", v, 1e-4, &n1) == CL8_OK);
  REQUIRE(cl8_nijenhuis_max("capi-canonical", v, 1e-4, &n2) == CL8_OK);
  CHECK(n1 == doctest::Approx(n2).epsilon(1e-6));
  CHECK(n1 > 1e-2);
  CHECK(cl8_holo_defect("nope", v, 1e-5, &d1) == CL8_ERR_UNKNOWN_SECTION);
}

TEST_CASE("verify through the C interface") {
  char* s = nullptr;
  int code = -1;
  REQUIRE(cl8_verify(R"({"suite":"clifford","format":"json","samples":5})", &s, &code) == CL8_OK);
  CHECK(code == 0);
  const auto j = nlohmann::json::parse(take(s));
  CHECK(j["header"]["suite"] == "clifford");
  CHECK(j["checks"].size() == 4);
  REQUIRE(cl8_verify(R"({"suite":"twistor","samples":5,"tolerances":{"fiber":1e-300}})", &s, &code) == CL8_OK);
  CHECK(code == 1);
  CHECK(take(s).find("FAIL") != std::string::npos);
  CHECK(cl8_verify(R"({"suite":"clifford","bogus":1})", &s, &code) == CL8_ERR_CONFIG);
  CHECK(cl8_verify(R"({"suite":"nope"})", &s, &code) == CL8_ERR_CONFIG);
  CHECK(cl8_verify("not json", &s, &code) == CL8_ERR_CONFIG);
  CHECK(cl8_verify(R"({"samples":"many"})", &s, &code) == CL8_ERR_CONFIG);
  REQUIRE(cl8_default_tolerances_json(&s) == CL8_OK);
  const auto t = nlohmann::json::parse(take(s));
  CHECK(t["fiber"] == 1e-8);
  CHECK(t["fraction"] == 0.95);
}

TEST_CASE("scan through the C interface") {
  const std::string path = "capi_scan.csv";
  REQUIRE(cl8_scan_s6("canonical", 2, 0, 1e-4, path.c_str()) == CL8_OK);
  std::ifstream in(path);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 3);
  std::remove(path.c_str());
  CHECK(cl8_scan_s6("nope", 2, 0, 1e-4, path.c_str()) == CL8_ERR_UNKNOWN_SECTION);
  CHECK(cl8_scan_s6("canonical", 0, 0, 1e-4, path.c_str()) != CL8_OK);
  CHECK_FALSE(std::ifstream(path).good());
}
