#include "cl8/cl8.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include "error.hpp"
#include "expr.hpp"
#include "json.hpp"
#include "multivector_text.hpp"
#include "sections.hpp"
#include "spinor.hpp"
#include "twistor.hpp"
#include "verify.hpp"
#include "version.hpp"

struct cl8_mv {
  std::variant<cl8::ExactMv, cl8::RealMv> value;
};

namespace {

thread_local std::string last_error;

cl8_status set_error(cl8_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
cl8_status guard(F&& f) {
  try {
    f();
    return CL8_OK;
  } catch (const cl8::Error& e) {
    return set_error(static_cast<cl8_status>(static_cast<int>(e.code())), e.what());
  } catch (const nlohmann::json::exception& e) {
    return set_error(CL8_ERR_CONFIG, e.what());
  } catch (const std::exception& e) {
    return set_error(CL8_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(CL8_ERR_INTERNAL, "unknown exception");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) cl8::fail(cl8::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cl8::Vec8 read_vec(const double* p) {
  cl8::Vec8 v;
  for (int i = 0; i < 8; ++i) v(i) = p[i];
  return v;
}

void write_vec(const cl8::Vec8& v, double* p) {
  for (int i = 0; i < 8; ++i) p[i] = v(i);
}

void write_mat(const cl8::Mat8& m, double* p) {
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) p[i * 8 + j] = m(i, j);
}

cl8::GrassmannPoint read_plane(const double* u, const double* w) {
  require(u, "u");
  require(w, "w");
  return cl8::GrassmannPoint::from_frame(read_vec(u), read_vec(w));
}

template <class F>
cl8_status binary(const cl8_mv* a, const cl8_mv* b, cl8_mv** out, F&& op) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    if (a->value.index() != b->value.index()) cl8::fail(cl8::ErrorCode::RingMismatch, "operands use different rings");
    *out = std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          return new cl8_mv{op(x, std::get<T>(b->value))};
        },
        a->value);
  });
}

template <class F>
cl8_status unary(const cl8_mv* a, cl8_mv** out, F&& op) {
  return guard([&] {
    require(a, "a");
    require(out, "out");
    *out = std::visit([&](const auto& x) { return new cl8_mv{op(x)}; }, a->value);
  });
}

}  // namespace

extern "C" {

const char* cl8_version(void) { return cl8::kVersion; }
const char* cl8_last_error(void) { return last_error.c_str(); }
void cl8_string_free(char* s) { std::free(s); }

cl8_status cl8_mv_parse(const char* text, cl8_ring ring, int generators, cl8_mv** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    if (generators < 1 || generators > cl8::kMaxGenerators) {
      cl8::fail(cl8::ErrorCode::InvalidArgument, "generator count must be in 1..12");
    }
    if (ring == CL8_RING_EXACT) {
      *out = new cl8_mv{cl8::parse_multivector<cl8::Rational>(text, generators)};
    } else if (ring == CL8_RING_REAL) {
      *out = new cl8_mv{cl8::parse_multivector<double>(text, generators)};
    } else {
      cl8::fail(cl8::ErrorCode::InvalidArgument, "unknown ring");
    }
  });
}

cl8_status cl8_mv_from_vector(const double v[8], cl8_mv** out) {
  return guard([&] {
    require(v, "v");
    require(out, "out");
    *out = new cl8_mv{cl8::to_multivector(read_vec(v))};
  });
}

void cl8_mv_free(cl8_mv* a) { delete a; }

cl8_status cl8_mv_ring(const cl8_mv* a, cl8_ring* out) {
  return guard([&] {
    require(a, "a");
    require(out, "out");
    *out = a->value.index() == 0 ? CL8_RING_EXACT : CL8_RING_REAL;
  });
}

cl8_status cl8_mv_format(const cl8_mv* a, char** out) {
  return guard([&] {
    require(a, "a");
    require(out, "out");
    *out = dup_string(std::visit([](const auto& x) { return cl8::format_multivector(x); }, a->value));
  });
}

cl8_status cl8_mv_mul(const cl8_mv* a, const cl8_mv* b, cl8_mv** out) {
  return binary(a, b, out, [](const auto& x, const auto& y) { return x * y; });
}

cl8_status cl8_mv_wedge(const cl8_mv* a, const cl8_mv* b, cl8_mv** out) {
  return binary(a, b, out, [](const auto& x, const auto& y) { return cl8::wedge(x, y); });
}

cl8_status cl8_mv_add(const cl8_mv* a, const cl8_mv* b, cl8_mv** out) {
  return binary(a, b, out, [](const auto& x, const auto& y) { return x + y; });
}

cl8_status cl8_mv_reverse(const cl8_mv* a, cl8_mv** out) {
  return unary(a, out, [](const auto& x) { return x.reversion(); });
}

cl8_status cl8_mv_involute(const cl8_mv* a, cl8_mv** out) {
  return unary(a, out, [](const auto& x) { return x.grade_involution(); });
}

cl8_status cl8_mv_grade(const cl8_mv* a, int k, cl8_mv** out) {
  return unary(a, out, [k](const auto& x) { return x.grade_project(k); });
}

cl8_status cl8_mv_equal(const cl8_mv* a, const cl8_mv* b, int* out) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    if (a->value.index() != b->value.index()) cl8::fail(cl8::ErrorCode::RingMismatch, "operands use different rings");
    *out = a->value == b->value ? 1 : 0;
  });
}

cl8_status cl8_mv_inner(const cl8_mv* a, const cl8_mv* b, double* out) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    if (a->value.index() != b->value.index()) cl8::fail(cl8::ErrorCode::RingMismatch, "operands use different rings");
    if (a->value.index() == 0) {
      *out = cl8::blade_inner(std::get<0>(a->value), std::get<0>(b->value)).get_d();
    } else {
      *out = cl8::blade_inner(std::get<1>(a->value), std::get<1>(b->value));
    }
  });
}

cl8_status cl8_rep_json(const cl8_mv* a, char** out) {
  return guard([&] {
    require(a, "a");
    require(out, "out");
    const auto& spin = cl8::SpinorStructure::instance();
    nlohmann::json rows = nlohmann::json::array();
    if (a->value.index() == 0) {
      const cl8::ExactMatrix m = spin.rep(std::get<0>(a->value));
      for (std::size_t i = 0; i < 16; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < 16; ++j) row.push_back(m(i, j).get_str());
        rows.push_back(row);
      }
    } else {
      const cl8::Mat16 m = spin.rep(std::get<1>(a->value));
      for (int i = 0; i < 16; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < 16; ++j) row.push_back(m(i, j));
        rows.push_back(row);
      }
    }
    *out = dup_string(rows.dump());
  });
}

cl8_status cl8_eval(const char* expr, char** out) {
  return guard([&] {
    require(expr, "expr");
    require(out, "out");
    *out = dup_string(cl8::format_value(cl8::evaluate_expression(expr)));
  });
}

cl8_status cl8_phi_star(const double u[8], const double w[8], double J[64]) {
  return guard([&] {
    require(J, "J");
    write_mat(cl8::phi_star(read_plane(u, w)).J, J);
  });
}

cl8_status cl8_tau(const double u[8], const double w[8], double v[8]) {
  return guard([&] {
    require(v, "v");
    write_vec(cl8::tau(read_plane(u, w)).vec(), v);
  });
}

cl8_status cl8_j_v(const double v[8], double J[64]) {
  return guard([&] {
    require(v, "v");
    require(J, "J");
    write_mat(cl8::j_v(cl8::S6Point::make(read_vec(v))).J, J);
  });
}

cl8_status cl8_fiber_point(const double v[8], const double u[8], double frame_u[8], double frame_w[8]) {
  return guard([&] {
    require(v, "v");
    require(u, "u");
    require(frame_u, "frame_u");
    require(frame_w, "frame_w");
    const cl8::Vec8 uu = read_vec(u);
    if (std::abs(uu.norm() - 1.0) > 1e-10) cl8::fail(cl8::ErrorCode::PreconditionViolation, "u must be a unit vector");
    const cl8::GrassmannPoint x = cl8::fiber_point(cl8::S6Point::make(read_vec(v)), uu);
    write_vec(x.u(), frame_u);
    write_vec(x.w(), frame_w);
  });
}

cl8_status cl8_tau1(const double u[8], const double w[8], double t[8]) {
  return guard([&] {
    require(t, "t");
    write_vec(cl8::tau1(read_plane(u, w)).vec(), t);
  });
}

cl8_status cl8_theta_fiber(double theta, const double a[8], double frame_u[8], double frame_w[8]) {
  return guard([&] {
    require(a, "a");
    require(frame_u, "frame_u");
    require(frame_w, "frame_w");
    const cl8::GrassmannPoint x = cl8::theta_fiber(theta, read_vec(a));
    write_vec(x.u(), frame_u);
    write_vec(x.w(), frame_w);
  });
}

cl8_status cl8_register_section(const char* name, cl8_section_fn fn, void* user) {
  return guard([&] {
    require(name, "name");
    if (fn == nullptr) cl8::fail(cl8::ErrorCode::InvalidArgument, "callback is null");
    cl8::SectionRegistry::global().add(cl8::Section(name, [fn, user](const cl8::S6Point& v) {
      double vin[8], u[8], w[8];
      write_vec(v.vec(), vin);
      fn(vin, u, w, user);
      return cl8::GrassmannPoint::from_frame(read_vec(u), read_vec(w));
    }));
  });
}

cl8_status cl8_holo_defect(const char* section, const double v[8], double h, double* out) {
  return guard([&] {
    require(section, "section");
    require(v, "v");
    require(out, "out");
    *out = cl8::holo_defect(cl8::SectionRegistry::global().find(section), cl8::S6Point::make(read_vec(v)), h);
  });
}

cl8_status cl8_nijenhuis_max(const char* section, const double v[8], double h, double* out) {
  return guard([&] {
    require(section, "section");
    require(v, "v");
    require(out, "out");
    *out = cl8::nijenhuis_max(cl8::SectionRegistry::global().find(section), cl8::S6Point::make(read_vec(v)), h);
  });
}

cl8_status cl8_verify(const char* config_json, char** report, int* exit_code) {
  return guard([&] {
    require(report, "report");
    require(exit_code, "exit_code");
    const nlohmann::json j =
        config_json == nullptr || *config_json == '\0' ? nlohmann::json::object() : nlohmann::json::parse(config_json);
    if (!j.is_object()) cl8::fail(cl8::ErrorCode::Config, "config must be a JSON object");
    static const char* known[] = {"suite", "seed", "samples", "fd_step", "tolerances", "format", "section", "timings"};
    for (const auto& item : j.items()) {
      if (std::find(std::begin(known), std::end(known), item.key()) == std::end(known)) {
        cl8::fail(cl8::ErrorCode::Config, "unknown config key '" + item.key() + "'");
      }
    }
    cl8::SuiteConfig cfg;
    cfg.suite = j.value("suite", cfg.suite);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.samples = j.value("samples", cfg.samples);
    cfg.fd_step = j.value("fd_step", cfg.fd_step);
    cfg.format = j.value("format", cfg.format);
    cfg.section = j.value("section", cfg.section);
    if (j.contains("tolerances")) cfg.tolerances = j.at("tolerances").get<std::map<std::string, double>>();
    const bool timings = j.value("timings", true);
    const cl8::Report r = cl8::run(cfg);
    *report = dup_string(cfg.format == "json" ? cl8::report_json(r, timings) : cl8::report_text(r));
    *exit_code = r.exit_code();
  });
}

cl8_status cl8_default_tolerances_json(char** out) {
  return guard([&] {
    require(out, "out");
    *out = dup_string(nlohmann::json(cl8::default_tolerances()).dump());
  });
}

cl8_status cl8_scan_s6(const char* section, int64_t samples, uint64_t seed, double fd_step, const char* path) {
  return guard([&] {
    require(section, "section");
    require(path, "path");
    if (!cl8::SectionRegistry::global().contains(section)) {
      cl8::fail(cl8::ErrorCode::UnknownSection, std::string("unknown section '") + section + "'");
    }
    // Buffered so a failed scan leaves no file behind.
    std::ostringstream buf;
    cl8::scan_s6(section, samples, seed, fd_step, buf);
    std::ofstream os(path);
    if (!os) cl8::fail(cl8::ErrorCode::Config, std::string("cannot open '") + path + "' for writing");
    os << buf.str();
    if (!os) cl8::fail(cl8::ErrorCode::Internal, "write failed");
  });
}

}  // extern "C"
