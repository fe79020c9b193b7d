#include "spinor.hpp"

#include <string>

namespace cl8 {

ExactMv expand_a8() {
  ExactMv out(8);
  for (unsigned imag = 0; imag < 16; ++imag) {
    const int k = std::popcount(imag);
    if (k % 2) continue;
    // Factor j contributes e_{2j+1} (real part) or e_{2j+2} (imaginary part); indices
    // increase left to right, so the product is already a canonical blade.
    Mask m = 0;
    for (int j = 0; j < 4; ++j) {
      m = static_cast<Mask>(m | generator_mask(2 * j + 1 + ((imag >> j) & 1U)));
    }
    out.add_term(m, Rational((k / 2) % 2 ? -1 : 1));
  }
  return out;
}

const SpinorStructure& SpinorStructure::instance() {
  static const SpinorStructure s = build();
  return s;
}

SpinorStructure SpinorStructure::build() {
  SpinorStructure s;
  const ExactMv one = ExactMv::scalar(1);
  s.a8_ = expand_a8();
  s.beta8_ = ExactMv::blade(0b01010101, 1);
  s.a_ = s.a8_ * (one + s.beta8_);
  s.a8_beta8_ = s.a8_ * s.beta8_;
  const ExactMv e1 = ExactMv::basis(1);
  for (int b = 1; b <= 8; ++b) s.alphas_.push_back(e1 * ExactMv::basis(b) * s.a_);
  for (int b = 1; b <= 8; ++b) s.alphas_.push_back(ExactMv::basis(b) * s.a_);

  ExactMatrix coord(256, 16);
  for (std::size_t j = 0; j < 16; ++j) {
    for (const auto& [m, c] : s.alphas_[j].terms()) coord(m, j) = c;
  }
  // Pivot rows of the transpose pick 16 blades on which the alphas are independent.
  ExactMatrix t = coord.transpose();
  const auto pivots = reduce_row_echelon(t);
  s.alpha_rank_ = pivots.size();
  if (s.alpha_rank_ != 16) {
    fail(ErrorCode::Internal, "spinor basis has rank " + std::to_string(s.alpha_rank_) + ", expected 16");
  }
  ExactMatrix square(16, 16);
  for (std::size_t r = 0; r < 16; ++r) {
    s.pivot_blades_.push_back(static_cast<Mask>(pivots[r]));
    for (std::size_t j = 0; j < 16; ++j) square(r, j) = coord(pivots[r], j);
  }
  auto inv = exact_inverse(square);
  if (!inv) fail(ErrorCode::Internal, "singular pivot block in spinor solver");
  s.pivot_inverse_ = std::move(*inv);

  s.basis_real_.resize(256, 16);
  for (std::size_t r = 0; r < 256; ++r)
    for (std::size_t j = 0; j < 16; ++j) s.basis_real_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) = coord(r, j).get_d();
  s.pseudo_inverse_ = s.basis_real_.completeOrthogonalDecomposition().pseudoInverse();

  s.a8_real_ = to_real(s.a8_);
  s.a_real_ = to_real(s.a_);
  s.a8_beta8_real_ = to_real(s.a8_beta8_);
  for (const auto& a : s.alphas_) s.alphas_real_.push_back(to_real(a));

  s.blade_reps_.reserve(256);
  s.blade_reps_real_.reserve(256);
  for (unsigned m = 0; m < 256; ++m) {
    s.blade_reps_.push_back(s.rep(ExactMv::blade(static_cast<Mask>(m), 1)));
    Mat16 real;
    for (int r = 0; r < 16; ++r)
      for (int c = 0; c < 16; ++c) real(r, c) = s.blade_reps_.back()(r, c).get_d();
    s.blade_reps_real_.push_back(real);
  }
  return s;
}

ExactSpinorCoords SpinorStructure::coords(const ExactMv& sp) const {
  if (sp.generators() != 8) fail(ErrorCode::GeneratorMismatch, "spinor coordinates need Cl_8");
  ExactSpinorCoords c;
  for (std::size_t j = 0; j < 16; ++j) {
    Rational acc(0);
    for (std::size_t r = 0; r < 16; ++r) {
      const Rational& p = pivot_inverse_(j, r);
      if (sgn(p) != 0) acc += p * sp.coefficient(pivot_blades_[r]);
    }
    c[j] = acc;
  }
  ExactMv residual = sp;
  for (std::size_t j = 0; j < 16; ++j) {
    if (sgn(c[j]) == 0) continue;
    for (const auto& [m, a] : alphas_[j].terms()) residual.add_term(m, -c[j] * a);
  }
  if (!residual.is_zero()) {
    fail(ErrorCode::NotInIdeal, "element is not in the spinor module (" + std::to_string(residual.size()) +
                                    " residual terms)");
  }
  return c;
}

Vec16 SpinorStructure::coords(const RealMv& sp) const {
  if (sp.generators() != 8) fail(ErrorCode::GeneratorMismatch, "spinor coordinates need Cl_8");
  Eigen::VectorXd dense = Eigen::VectorXd::Zero(256);
  for (const auto& [m, c] : sp.terms()) dense(m) = c;
  const Vec16 c = pseudo_inverse_ * dense;
  const double residual = (basis_real_ * c - dense).norm();
  if (residual > 1e-9 * std::max(1.0, dense.norm())) {
    fail(ErrorCode::NotInIdeal, "element is not in the spinor module (residual " + std::to_string(residual) + ")");
  }
  return c;
}

ExactMatrix SpinorStructure::rep(const ExactMv& x) const {
  ExactMatrix out(16, 16);
  for (std::size_t j = 0; j < 16; ++j) {
    const auto c = coords(x * alphas_[j]);
    for (std::size_t i = 0; i < 16; ++i) out(i, j) = c[i];
  }
  return out;
}

Mat16 SpinorStructure::rep(const RealMv& x) const {
  Mat16 out;
  for (int j = 0; j < 16; ++j) out.col(j) = coords(x * alphas_real_[static_cast<std::size_t>(j)]);
  return out;
}

Mat16 SpinorStructure::rep_linear(const RealMv& x) const {
  if (x.generators() != 8) fail(ErrorCode::GeneratorMismatch, "spin representation needs Cl_8");
  Mat16 out = Mat16::Zero();
  for (const auto& [m, c] : x.terms()) out += c * blade_reps_real_[m];
  return out;
}

Mat8 SpinorStructure::even_block(const RealMv& x) const {
  if (x.generators() != 8) fail(ErrorCode::GeneratorMismatch, "spin representation needs Cl_8");
  Mat8 out = Mat8::Zero();
  for (const auto& [m, c] : x.terms()) {
    if (grade(m) % 2 == 0) out += c * blade_reps_real_[m].topLeftCorner<8, 8>();
  }
  return out;
}

ExactMatrix SpinorStructure::odd_block(const std::array<Rational, 8>& v) const {
  ExactMatrix out(8, 8);
  for (int i = 0; i < 8; ++i) {
    if (sgn(v[static_cast<std::size_t>(i)]) == 0) continue;
    const ExactMatrix& r = blade_reps_[generator_mask(i + 1)];
    for (std::size_t a = 0; a < 8; ++a)
      for (std::size_t b = 0; b < 8; ++b) out(a, b) += v[static_cast<std::size_t>(i)] * r(a, 8 + b);
  }
  return out;
}

Mat8 SpinorStructure::odd_block(const Vec8& v) const {
  Mat8 out = Mat8::Zero();
  for (int i = 0; i < 8; ++i) out += v(i) * blade_reps_real_[generator_mask(i + 1)].topRightCorner<8, 8>();
  return out;
}

}  // namespace cl8
