#include "twistor.hpp"

#include <cmath>
#include <string>

#include "spinor.hpp"

namespace cl8 {
namespace {

constexpr double kFrameTol = 1e-10;
constexpr double kCliffTol = 1e-9;
constexpr double kDecodeTol = 1e-9;

std::string fmt(double x) { return std::to_string(x); }

}  // namespace

GrassmannPoint GrassmannPoint::from_frame(const Vec8& u, const Vec8& w) {
  const double nu = u.norm();
  if (!(nu > 1e-12)) fail(ErrorCode::PreconditionViolation, "degenerate frame: first vector is zero");
  Vec8 e1 = u / nu;
  Vec8 e2 = w - e1.dot(w) * e1;
  const double nw = e2.norm();
  if (!(nw > 1e-12 * std::max(1.0, w.norm()))) {
    fail(ErrorCode::PreconditionViolation, "degenerate frame: vectors are parallel");
  }
  e2 /= nw;
  // Reorthogonalize once more for the 1e-10 frame invariant.
  e2 -= e1.dot(e2) * e1;
  e2.normalize();
  RealMv cliff = to_multivector(e1) * to_multivector(e2);
  const RealMv sq = cliff * cliff + RealMv::scalar(1.0);
  if (max_abs(sq) > kCliffTol) fail(ErrorCode::Internal, "frame product does not square to -1");
  return GrassmannPoint(std::move(e1), std::move(e2), std::move(cliff));
}

S6Point S6Point::make(const Vec8& v, double tol) {
  if (std::abs(v.norm() - 1.0) > tol || std::abs(v(0)) > tol) {
    fail(ErrorCode::PreconditionViolation, "not a point of S^6 (|v| = " + fmt(v.norm()) + ", <v,e1> = " + fmt(v(0)) + ")");
  }
  return S6Point(v);
}

S6Point S6Point::normalized(Vec8 v) {
  v(0) = 0.0;
  const double n = v.norm();
  if (!(n > 1e-12)) fail(ErrorCode::PreconditionViolation, "cannot normalize onto S^6: vector is parallel to e1");
  return S6Point(v / n);
}

S4Point S4Point::make(const Vec8& t, double tol) {
  if (std::abs(t.norm() - 1.0) > tol || std::abs(t(0)) > tol || std::abs(t(1)) > tol || std::abs(t(2)) > tol) {
    fail(ErrorCode::PreconditionViolation, "not a point of S^4");
  }
  return S4Point(t);
}

Mat8 standard_j() {
  Mat8 j = Mat8::Zero();
  for (int i = 0; i < 4; ++i) {
    j(2 * i + 1, 2 * i) = 1.0;
    j(2 * i, 2 * i + 1) = -1.0;
  }
  return j;
}

Eigen::Matrix<double, 8, Eigen::Dynamic> orthonormal_complement(const Eigen::Matrix<double, 8, Eigen::Dynamic>& basis) {
  const auto k = basis.cols();
  Eigen::Matrix<double, 8, Eigen::Dynamic> all(8, 8);
  all.leftCols(k) = basis;
  bool used[8] = {};
  for (auto col = k; col < 8; ++col) {
    int best = -1;
    double best_norm = -1.0;
    Vec8 best_vec;
    for (int axis = 0; axis < 8; ++axis) {
      if (used[axis]) continue;
      Vec8 r = unit_vector(axis + 1);
      for (Eigen::Index c = 0; c < col; ++c) r -= all.col(c).dot(r) * all.col(c);
      const double n = r.norm();
      if (n > best_norm + 1e-12) {
        best = axis;
        best_norm = n;
        best_vec = r;
      }
    }
    used[best] = true;
    for (Eigen::Index c = 0; c < col; ++c) best_vec -= all.col(c).dot(best_vec) * all.col(c);
    all.col(col) = best_vec.normalized();
  }
  return all.rightCols(8 - k);
}

ComplexStructure8 phi_star(const GrassmannPoint& x) {
  ComplexStructure8 j{SpinorStructure::instance().even_block(x.cliff())};
  if (j.orthogonality_residual() > 1e-9 || j.square_residual() > 1e-9) {
    fail(ErrorCode::Internal, "spin image of a plane is not an orthogonal complex structure");
  }
  return j;
}

S6Point tau(const GrassmannPoint& x) {
  const auto& spin = SpinorStructure::instance();
  const Vec16 c = spin.coords(x.cliff() * spin.a_real());
  const Vec8 v = c.head<8>();
  if (c.tail<8>().norm() > kDecodeTol || std::abs(v(0)) > kDecodeTol || std::abs(v.norm() - 1.0) > kDecodeTol) {
    fail(ErrorCode::DecompositionFailure, "x A is not of the form e1 v A with v in S^6");
  }
  return S6Point::make(v, kDecodeTol);
}

ComplexStructure8 j_v(const S6Point& vp) {
  const auto& spin = SpinorStructure::instance();
  const Vec8& v = vp.vec();
  const Vec8 e1 = unit_vector(1);
  const RealMv e1v = to_multivector(e1) * to_multivector(v);
  Mat8 J;
  for (int i = 0; i < 8; ++i) {
    const Vec8 basis = unit_vector(i + 1);
    const double along_e1 = basis(0);
    const double along_v = v.dot(basis);
    const Vec8 rest = basis - along_e1 * e1 - along_v * v;
    Vec8 image = along_e1 * v - along_v * e1;
    if (rest.norm() > 1e-14) {
      // J_v(w) A = -e1 v w A lies in V-, whose basis is alpha_{B+8} = e_B A.
      const Vec16 c = spin.coords(-(e1v * to_multivector(rest)) * spin.a_real());
      if (c.head<8>().norm() > kDecodeTol) fail(ErrorCode::DecompositionFailure, "J_v image has a V+ component");
      image += SpinorStructure::decode_vector(c, true);
    }
    J.col(i) = image;
  }
  ComplexStructure8 out{J};
  if (out.orthogonality_residual() > 1e-9 || out.square_residual() > 1e-9) {
    fail(ErrorCode::DecompositionFailure, "J_v is not an orthogonal complex structure");
  }
  return out;
}

GrassmannPoint fiber_point(const S6Point& v, const Vec8& u) {
  if (std::abs(u.norm() - 1.0) > 1e-9) fail(ErrorCode::PreconditionViolation, "fiber_point needs a unit vector u");
  const Mat8 J = j_v(v).J;
  return GrassmannPoint::from_frame(u, J * u);
}

Vec8 tangent_action(const GrassmannPoint& x, const Vec8& X) {
  const auto& spin = SpinorStructure::instance();
  const Vec8 v = tau(x).vec();
  const double scale = std::max(1.0, X.norm());
  if (std::abs(X(0)) > 1e-9 * scale || std::abs(X.dot(v)) > 1e-9 * scale) {
    fail(ErrorCode::PreconditionViolation, "vector is not tangent to S^6 at tau(x)");
  }
  const RealMv e1 = RealMv::basis(1);
  const Vec16 c = spin.coords(x.cliff() * e1 * to_multivector(X) * spin.a_real());
  if (c.tail<8>().norm() > kDecodeTol * scale) fail(ErrorCode::DecompositionFailure, "x e1 X A has a V- component");
  return c.head<8>();
}

S4Point tau1(const GrassmannPoint& x) {
  const auto& spin = SpinorStructure::instance();
  const Vec8 v = tau(x).vec();
  if ((v - unit_vector(3)).norm() > 1e-8) fail(ErrorCode::NotInFiber, "plane does not lie over e3");
  const Vec16 c = spin.coords(x.cliff() * spin.alpha_real(2));
  if (c.tail<8>().norm() > kDecodeTol) fail(ErrorCode::DecompositionFailure, "x alpha_2 has a V- component");
  const Vec8 t = -c.head<8>();
  if (std::abs(t.norm() - 1.0) > kDecodeTol || std::abs(t(0)) > kDecodeTol || std::abs(t(1)) > kDecodeTol ||
      std::abs(t(2)) > kDecodeTol) {
    fail(ErrorCode::DecompositionFailure, "tau1 image is not a point of S^4");
  }
  return S4Point::make(t, kDecodeTol);
}

Eigen::Matrix<double, 8, 4> theta_subspace(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Eigen::Matrix<double, 8, 4> b = Eigen::Matrix<double, 8, 4>::Zero();
  const int pairs[4][2] = {{1, 7}, {3, 5}, {2, 8}, {4, 6}};
  for (int k = 0; k < 4; ++k) {
    b(pairs[k][0] - 1, k) = c;
    b(pairs[k][1] - 1, k) = s;
  }
  return b;
}

GrassmannPoint theta_fiber(double theta, const Vec8& a) {
  if (std::abs(a.norm() - 1.0) > 1e-9) fail(ErrorCode::PreconditionViolation, "theta_fiber needs a unit vector");
  const auto basis = theta_subspace(theta);
  const Vec8 off = a - basis * (basis.transpose() * a);
  if (off.norm() > 1e-9) fail(ErrorCode::PreconditionViolation, "vector is not in V(theta)");
  const Mat8 J3 = j_v(S6Point::make(unit_vector(3))).J;
  return GrassmannPoint::from_frame(a, J3 * a);
}

S4Invariance s4_invariance_check(const GrassmannPoint& x) {
  const S4Point t = tau1(x);
  const Mat8 J = phi_star(x).J;
  Eigen::Matrix<double, 8, Eigen::Dynamic> fixed(8, 4);
  fixed.col(0) = unit_vector(1);
  fixed.col(1) = unit_vector(2);
  fixed.col(2) = unit_vector(3);
  fixed.col(3) = t.vec();
  const Eigen::Matrix<double, 8, 4> tangent = orthonormal_complement(fixed);
  // Image of the fixed span must have no component along T_t S^4.
  const double residual = (tangent.transpose() * J * fixed).norm();
  const Eigen::Matrix4d induced = tangent.transpose() * J * tangent;
  const double square = (induced * induced + Eigen::Matrix4d::Identity()).norm();
  if (!(residual < 1e-8)) {
    fail(ErrorCode::InvarianceFailure, "J_x does not preserve span{e1,e2,e3,t}: residual " + fmt(residual));
  }
  if (!(square < 1e-8)) fail(ErrorCode::InvarianceFailure, "induced structure on T_t S^4 does not square to -I");
  return S4Invariance{t, tangent, induced, residual, square};
}

RealMv calibration_form(double theta) {
  const auto b = theta_subspace(theta);
  return outer(b.col(0), b.col(1)) - outer(b.col(2), b.col(3));
}

double calibration_identity_residual(const GrassmannPoint& x, double theta) {
  const auto& spin = SpinorStructure::instance();
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  const Vec8 v = s * (s * unit_vector(3) - c * unit_vector(5));
  const RealMv e1 = RealMv::basis(1);
  const RealMv lhs = x.cliff() * spin.a8_beta8_real();
  const RealMv rhs = e1 * to_multivector(v) * spin.a8_real() +
                     e1 * to_multivector(unit_vector(3) - v) * spin.a8_beta8_real();
  return max_abs(lhs - rhs);
}

}  // namespace cl8
