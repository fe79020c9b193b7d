#include "sections.hpp"

#include <algorithm>
#include <cmath>

#include "spinor.hpp"

namespace cl8 {
namespace {

void check_step(double h) {
  if (!(h > 1e-9 && h < 1e-2)) fail(ErrorCode::InvalidArgument, "finite-difference step outside (1e-9, 1e-2)");
}

void check_tangent(const S6Point& v, const Vec8& X) {
  const double scale = std::max(1.0, X.norm());
  if (std::abs(X(0)) > 1e-9 * scale || std::abs(X.dot(v.vec())) > 1e-9 * scale) {
    fail(ErrorCode::PreconditionViolation, "vector is not tangent to S^6");
  }
}

Vec8 tangential(const Vec8& p, const Vec8& W) {
  Vec8 t = W - W.dot(p) * p;
  t(0) = 0.0;
  return t;
}

// Operator norm of the defect map in g-orthonormal coordinates.
double op_norm(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues()(0);
}

struct DefectMatrices {
  Eigen::Matrix<double, 12, 6> total, horizontal, vertical;
};

DefectMatrices defect_matrices(const Section& f, const S6Point& v, double h) {
  const auto basis = tangent_basis_s6(v);
  const GrassmannPoint x = f(v);
  const auto frame = tangent_frame(x);
  DefectMatrices out;
  for (int k = 0; k < 6; ++k) {
    const Vec8 X = basis.col(k);
    const G28Tangent push = section_push(f, v, X, h);
    const Vec8 JX = tau_push(jtilde(hv_split(push).horizontal));
    const G28Tangent lhs = section_push(f, v, JX, h);
    const G28Tangent defect{x, lhs.vec - jtilde(push).vec};
    const HVSplit parts = hv_split(defect);
    for (std::size_t j = 0; j < 12; ++j) {
      const double s = std::sqrt(2.0);
      out.total(static_cast<int>(j), k) = s * blade_inner(defect.vec, frame[j].vec);
      out.horizontal(static_cast<int>(j), k) = s * blade_inner(parts.horizontal.vec, frame[j].vec);
      out.vertical(static_cast<int>(j), k) = s * blade_inner(parts.vertical.vec, frame[j].vec);
    }
  }
  return out;
}

// J_f(p) on T_p S^6 is the restriction of J_{f(p)}.
Vec8 field(const Section& f, const Vec8& p, const Vec8& W, bool rotate) {
  const Vec8 t = tangential(p, W);
  if (!rotate) return t;
  return phi_star(f(S6Point::normalized(p))).J * t;
}

struct S6Field {
  const Vec8* dir;
  bool rotate;
};

Vec8 eval(const Section& f, const S6Field& F, const Vec8& p) { return field(f, p, *F.dir, F.rotate); }

Vec8 directional(const Section& f, const S6Field& F, const Vec8& v, const Vec8& w, double h) {
  const Vec8 plus = S6Point::normalized(v + h * w).vec();
  const Vec8 minus = S6Point::normalized(v - h * w).vec();
  return (eval(f, F, plus) - eval(f, F, minus)) / (2.0 * h);
}

Vec8 bracket(const Section& f, const S6Field& A, const S6Field& B, const Vec8& v, double h) {
  return directional(f, B, v, eval(f, A, v), h) - directional(f, A, v, eval(f, B, v), h);
}

}  // namespace

Section canonical_section() {
  return Section("canonical", [](const S6Point& v) { return GrassmannPoint::from_frame(unit_vector(1), v.vec()); });
}

Section perturbed_section(double rho) {
  return Section("perturbed", [rho](const S6Point& v) {
    const Vec8 w = tangential(v.vec(), unit_vector(2));
    const Vec8 u = (unit_vector(1) + rho * w).normalized();
    return fiber_point(v, u);
  });
}

SectionRegistry::SectionRegistry() {
  sections_.push_back(canonical_section());
  sections_.push_back(perturbed_section());
}

SectionRegistry& SectionRegistry::global() {
  static SectionRegistry r;
  return r;
}

void SectionRegistry::add(Section s) {
  std::lock_guard lock(mu_);
  for (auto& existing : sections_) {
    if (existing.name() == s.name()) {
      if (s.name() == "canonical" || s.name() == "perturbed") {
        fail(ErrorCode::InvalidArgument, "cannot replace shipped section '" + s.name() + "'");
      }
      existing = std::move(s);
      return;
    }
  }
  sections_.push_back(std::move(s));
}

Section SectionRegistry::find(const std::string& name) const {
  std::lock_guard lock(mu_);
  for (const auto& s : sections_)
    if (s.name() == name) return s;
  fail(ErrorCode::UnknownSection, "unknown section '" + name + "'");
}

bool SectionRegistry::contains(const std::string& name) const {
  std::lock_guard lock(mu_);
  return std::any_of(sections_.begin(), sections_.end(), [&](const Section& s) { return s.name() == name; });
}

std::vector<std::string> SectionRegistry::names() const {
  std::lock_guard lock(mu_);
  std::vector<std::string> out;
  for (const auto& s : sections_) out.push_back(s.name());
  return out;
}

Eigen::Matrix<double, 8, 6> tangent_basis_s6(const S6Point& v) {
  Eigen::Matrix<double, 8, Eigen::Dynamic> head(8, 2);
  head.col(0) = unit_vector(1);
  head.col(1) = v.vec();
  return orthonormal_complement(head);
}

G28Tangent section_push(const Section& f, const S6Point& v, const Vec8& X, double h) {
  check_step(h);
  check_tangent(v, X);
  const GrassmannPoint x = f(v);
  const double speed = X.norm();
  if (speed == 0.0) return G28Tangent{x, RealMv(8)};
  const Vec8 dir = X / speed;
  auto at = [&](double s) {
    const Vec8 p = std::cos(s * speed) * v.vec() + std::sin(s * speed) * dir;
    return f(S6Point::normalized(p)).bivector();
  };
  RealMv d = (at(h) - at(-h)) * (0.5 / h);
  return G28Tangent{x, project_tangent(x, d)};
}

Vec8 induced_acs(const Section& f, const S6Point& v, const Vec8& X, double h) {
  const G28Tangent push = section_push(f, v, X, h);
  return tau_push(jtilde(hv_split(push).horizontal));
}

TangentMap induced_acs_map(const Section& f, const S6Point& v, double h) {
  TangentMap m;
  m.basis = tangent_basis_s6(v);
  for (int k = 0; k < 6; ++k) m.matrix.col(k) = m.basis.transpose() * induced_acs(f, v, m.basis.col(k), h);
  return m;
}

double holo_defect(const Section& f, const S6Point& v, double h) { return op_norm(defect_matrices(f, v, h).total); }

HoloDefectParts holo_defect_parts(const Section& f, const S6Point& v, double h) {
  const DefectMatrices d = defect_matrices(f, v, h);
  return HoloDefectParts{op_norm(d.total),       op_norm(d.horizontal),  op_norm(d.vertical),
                         d.total.norm(),          d.horizontal.norm(),     d.vertical.norm()};
}

SpinorCoords16c beta_form(const Section& f, const S6Point& v, const ComplexVec8& X, const ComplexVec8& Y, double h) {
  const auto& spin = SpinorStructure::instance();
  const Vec8 xr = X.real(), xi = X.imag(), yr = Y.real(), yi = Y.imag();
  const RealMv p = section_push(f, v, yr, h).vec;
  const RealMv q = section_push(f, v, yi, h).vec;
  const RealMv e1 = RealMv::basis(1);
  const RealMv r = e1 * to_multivector(xr) * spin.a_real();
  const RealMv s = e1 * to_multivector(xi) * spin.a_real();
  const Vec16 re = spin.coords(p * r - q * s);
  const Vec16 im = spin.coords(p * s + q * r);

  // e1 Z A = sum Z_i alpha_i, so the projection keeps the T_v S^6 part of the V+ coordinates.
  auto project = [&](const Vec16& c) {
    Vec16 out = Vec16::Zero();
    out.head<8>() = tangential(v.vec(), Vec8(c.head<8>()));
    return out;
  };
  const Vec16 pr = project(re), pi = project(im);
  SpinorCoords16c out;
  for (int i = 0; i < 16; ++i) out(i) = {pr(i), pi(i)};
  return out;
}

Vec8 nijenhuis_s6(const Section& f, const S6Point& v, const Vec8& X, const Vec8& Y, double h) {
  check_step(h);
  check_tangent(v, X);
  check_tangent(v, Y);
  const Vec8& p = v.vec();
  const S6Field fx{&X, false}, fy{&Y, false}, jx{&X, true}, jy{&Y, true};
  const Mat8 J = phi_star(f(v)).J;
  const Vec8 n = bracket(f, jx, jy, p, h) - J * tangential(p, bracket(f, jx, fy, p, h)) -
                 J * tangential(p, bracket(f, fx, jy, p, h)) - bracket(f, fx, fy, p, h);
  return tangential(p, n);
}

double nijenhuis_max(const Section& f, const S6Point& v, double h) {
  static constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {1, 5}};
  const auto basis = tangent_basis_s6(v);
  double best = 0.0;
  for (const auto& pr : kPairs) {
    best = std::max(best, nijenhuis_s6(f, v, basis.col(pr[0]), basis.col(pr[1]), h).norm());
  }
  return best;
}

}  // namespace cl8
