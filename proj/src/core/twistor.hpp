#pragma once

#include <Eigen/Dense>

#include "linalg.hpp"
#include "multivector.hpp"

namespace cl8 {

/// Oriented 2-plane in R^8 held as an orthonormal frame (u, w) and its Clifford product u w.
class GrassmannPoint {
 public:
  /// Gram-Schmidt on (u, w); the orientation is the given order.
  static GrassmannPoint from_frame(const Vec8& u, const Vec8& w);

  const Vec8& u() const { return u_; }
  const Vec8& w() const { return w_; }
  const RealMv& cliff() const { return cliff_; }
  /// u ^ w, which equals cliff() since u and w are orthogonal.
  RealMv bivector() const { return cliff_.grade_project(2); }
  Mat8 skew() const { return u_ * w_.transpose() - w_ * u_.transpose(); }

 private:
  GrassmannPoint(Vec8 u, Vec8 w, RealMv cliff) : u_(std::move(u)), w_(std::move(w)), cliff_(std::move(cliff)) {}

  Vec8 u_, w_;
  RealMv cliff_;
};

/// Orthogonal complex structure on R^8: J^T J = I and J^2 = -I.
struct ComplexStructure8 {
  Mat8 J;

  double orthogonality_residual() const { return (J.transpose() * J - Mat8::Identity()).norm(); }
  double square_residual() const { return (J * J + Mat8::Identity()).norm(); }
};

/// Unit vector orthogonal to e1.
class S6Point {
 public:
  static S6Point make(const Vec8& v, double tol = 1e-10);
  /// Removes the e1 component and normalizes.
  static S6Point normalized(Vec8 v);
  const Vec8& vec() const { return v_; }

 private:
  explicit S6Point(Vec8 v) : v_(std::move(v)) {}
  Vec8 v_;
};

/// Unit vector orthogonal to e1, e2, e3.
class S4Point {
 public:
  static S4Point make(const Vec8& t, double tol = 1e-10);
  const Vec8& vec() const { return t_; }

 private:
  explicit S4Point(Vec8 t) : t_(std::move(t)) {}
  Vec8 t_;
};

/// J e_{2i-1} = e_{2i}, J e_{2i} = -e_{2i-1}.
Mat8 standard_j();

/// Orthonormal completion of the given orthonormal columns to a basis of R^8,
/// by Gram-Schmidt over the coordinate axes taking the largest remaining axis first.
Eigen::Matrix<double, 8, Eigen::Dynamic> orthonormal_complement(const Eigen::Matrix<double, 8, Eigen::Dynamic>& basis);

/// J_x: the V+ block of Phi(x), acting on R^8 through e1 v A = sum v_i alpha_i.
ComplexStructure8 phi_star(const GrassmannPoint& x);

/// The v in S^6 with x A = e1 v A.
S6Point tau(const GrassmannPoint& x);

/// J_v: e1 -> v, v -> -e1 and J_v(w) A = -e1 v w A for w orthogonal to e1 and v.
ComplexStructure8 j_v(const S6Point& v);

/// The plane u ^ J_v(u), which lies over v.
GrassmannPoint fiber_point(const S6Point& v, const Vec8& u);

/// Y with x e1 X A = e1 Y A, for X tangent to S^6 at tau(x).
Vec8 tangent_action(const GrassmannPoint& x, const Vec8& X);

/// t = e4 - 2 J v read from x alpha_2 = -e1 t A; x must lie over e3.
S4Point tau1(const GrassmannPoint& x);

/// Basis (columns) of V(theta), the span of cos(theta/2) e_i + sin(theta/2) e_j
/// for (i, j) in (1,7), (3,5), (2,8), (4,6).
Eigen::Matrix<double, 8, 4> theta_subspace(double theta);

/// The plane a ^ J_{e3}(a) for a unit vector a in V(theta); it lies over e3 and
/// maps to cos(theta) e4 + sin(theta) e6 under tau1.
GrassmannPoint theta_fiber(double theta, const Vec8& a);

struct S4Invariance {
  S4Point t;
  /// Orthonormal basis (columns) of T_t S^4 = {w orthogonal to e1, e2, e3, t}.
  Eigen::Matrix<double, 8, 4> tangent_basis;
  /// J_x restricted to T_t S^4 in that basis.
  Eigen::Matrix4d induced;
  double invariance_residual;
  double square_residual;
};

/// Checks that J_x preserves span{e1, e2, e3, t} and returns the induced complex structure on T_t S^4.
S4Invariance s4_invariance_check(const GrassmannPoint& x);

/// The 2-form whose contact set is the tau1 fibre over cos(theta) e4 + sin(theta) e6.
RealMv calibration_form(double theta);

/// max-abs residual of x A8 beta8 = e1 v A8 + e1 (e3 - v) A8 beta8 with
/// v = sin(theta/2) (sin(theta/2) e3 - cos(theta/2) e5).
double calibration_identity_residual(const GrassmannPoint& x, double theta);

}  // namespace cl8
