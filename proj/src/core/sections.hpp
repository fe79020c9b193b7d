#pragma once

#include <complex>
#include <functional>
#include <mutex>
#include <string>
#include <vector>

#include "smooth.hpp"

namespace cl8 {

/// Smooth section f: S^6 -> G(2,8) of tau, evaluated pointwise. Evaluation must be reentrant.
class Section {
 public:
  using Eval = std::function<GrassmannPoint(const S6Point&)>;

  Section(std::string name, Eval eval) : name_(std::move(name)), eval_(std::move(eval)) {}

  const std::string& name() const { return name_; }
  GrassmannPoint operator()(const S6Point& v) const { return eval_(v); }

 private:
  std::string name_;
  Eval eval_;
};

/// f(v) = e1 ^ v.
Section canonical_section();

/// f(v) = fiber_point(v, normalize(e1 + rho w(v))) with w(v) the tangential part of e2.
Section perturbed_section(double rho = 0.25);

/// Named sections available to the verifier and the C API. The two shipped
/// sections ("canonical", "perturbed") are always present; more can be added.
class SectionRegistry {
 public:
  static SectionRegistry& global();

  void add(Section s);
  /// Throws UnknownSection.
  Section find(const std::string& name) const;
  bool contains(const std::string& name) const;
  std::vector<std::string> names() const;
  std::vector<std::string> shipped_names() const { return {"canonical", "perturbed"}; }

 private:
  SectionRegistry();
  mutable std::mutex mu_;
  std::vector<Section> sections_;
};

/// Orthonormal basis (columns) of T_v S^6.
Eigen::Matrix<double, 8, 6> tangent_basis_s6(const S6Point& v);

/// f_* X by central differences of f along the great circle through v with velocity X,
/// projected onto T_{f(v)} G(2,8).
G28Tangent section_push(const Section& f, const S6Point& v, const Vec8& X, double h = 1e-5);

/// J_f X = tau_* J~ (horizontal part of f_* X).
Vec8 induced_acs(const Section& f, const S6Point& v, const Vec8& X, double h = 1e-5);

/// J_f at v as a 6x6 matrix in the basis tangent_basis_s6(v).
struct TangentMap {
  Eigen::Matrix<double, 8, 6> basis;
  Eigen::Matrix<double, 6, 6> matrix;
  Vec8 apply(const Vec8& X) const { return basis * (matrix * (basis.transpose() * X)); }
};
TangentMap induced_acs_map(const Section& f, const S6Point& v, double h = 1e-5);

/// Operator norm (largest singular value, metric g on the target) of
/// X -> f_* J_f X - J~ f_* X on T_v S^6. Zero iff f is holomorphic at v.
double holo_defect(const Section& f, const S6Point& v, double h = 1e-5);

struct HoloDefectParts {
  double total;
  double horizontal;  ///< operator norm of the horizontal part of the defect map
  double vertical;    ///< operator norm of the vertical part
  double frobenius_total;
  double frobenius_horizontal;
  double frobenius_vertical;
};
HoloDefectParts holo_defect_parts(const Section& f, const S6Point& v, double h = 1e-5);

using ComplexVec8 = Eigen::Matrix<std::complex<double>, 8, 1>;
using SpinorCoords16c = Eigen::Matrix<std::complex<double>, 16, 1>;

/// beta(X, Y) = pr(Yf . e1 X A): coordinates in alpha_1..alpha_16 of the projection onto
/// {e1 Z A : Z in T_v S^6 (x) C}.
SpinorCoords16c beta_form(const Section& f, const S6Point& v, const ComplexVec8& X, const ComplexVec8& Y,
                          double h = 1e-5);

/// N(X,Y) = [JX,JY] - J[JX,Y] - J[X,JY] - [X,Y] for J = J_f, with X, Y extended by
/// tangential projection of the constant ambient vectors; brackets by central differences.
Vec8 nijenhuis_s6(const Section& f, const S6Point& v, const Vec8& X, const Vec8& Y, double h = 1e-4);

/// Largest |N(b_i, b_j)| over a fixed set of pairs from tangent_basis_s6(v).
double nijenhuis_max(const Section& f, const S6Point& v, double h = 1e-4);

}  // namespace cl8
