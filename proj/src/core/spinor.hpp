#pragma once

#include <array>
#include <vector>

#include "exact_matrix.hpp"
#include "linalg.hpp"
#include "multivector.hpp"

namespace cl8 {

using ExactSpinorCoords = std::array<Rational, 16>;

/// The spinor module V = Cl_8 A, its basis alpha_1..alpha_16 and the spin
/// representation Phi: Cl_8 -> R(16).
///
/// A_8 = Re[(e1 + i e2)(e3 + i e4)(e5 + i e6)(e7 + i e8)], beta_8 = e1 e3 e5 e7,
/// A = A_8 (1 + beta_8), alpha_B = e1 e_B A and alpha_{B+8} = e_B A for B = 1..8.
/// Column j of Phi(x) holds the alpha-coordinates of x alpha_j, so that
/// x (alpha_1, ..., alpha_16) = (alpha_1, ..., alpha_16) Phi(x).
///
/// Immutable once built; the shared instance is safe for concurrent reads.
class SpinorStructure {
 public:
  static const SpinorStructure& instance();
  static SpinorStructure build();

  const ExactMv& a8() const { return a8_; }
  const ExactMv& beta8() const { return beta8_; }
  const ExactMv& a() const { return a_; }
  const ExactMv& a8_beta8() const { return a8_beta8_; }
  /// alpha_j, j = 1..16.
  const ExactMv& alpha(int j) const { return alphas_.at(static_cast<std::size_t>(j - 1)); }

  const RealMv& a_real() const { return a_real_; }
  const RealMv& a8_real() const { return a8_real_; }
  const RealMv& a8_beta8_real() const { return a8_beta8_real_; }
  const RealMv& alpha_real(int j) const { return alphas_real_.at(static_cast<std::size_t>(j - 1)); }

  /// Rank of the 256 x 16 coordinate matrix of the alphas (16 by construction).
  std::size_t alpha_rank() const { return alpha_rank_; }

  /// Coordinates c with sum_j c_j alpha_j = s. Throws NotInIdeal otherwise.
  ExactSpinorCoords coords(const ExactMv& s) const;
  /// Least-squares coordinates; throws NotInIdeal if the residual exceeds 1e-9 (relative to max(1,|s|)).
  Vec16 coords(const RealMv& s) const;

  /// Phi(x), column j = coords(x alpha_j).
  ExactMatrix rep(const ExactMv& x) const;
  Mat16 rep(const RealMv& x) const;
  /// Phi(x) assembled linearly from the cached exact images of the basis blades.
  Mat16 rep_linear(const RealMv& x) const;
  /// Upper-left 8x8 block of rep_linear(x), i.e. the action on V+.
  Mat8 even_block(const RealMv& x) const;

  /// Phi of a basis blade, exact.
  const ExactMatrix& blade_rep(Mask m) const { return blade_reps_.at(m); }

  /// Upper-right block P_v of Phi(v) for a vector v.
  ExactMatrix odd_block(const std::array<Rational, 8>& v) const;
  Mat8 odd_block(const Vec8& v) const;

  /// Vector sum_i c_i e_i read from the V+ coordinates (alpha_1..alpha_8), or
  /// from the V- coordinates (alpha_9..alpha_16) when odd is set.
  static Vec8 decode_vector(const Vec16& c, bool odd = false) {
    return odd ? Vec8(c.tail<8>()) : Vec8(c.head<8>());
  }

 private:
  SpinorStructure() = default;

  ExactMv a8_, beta8_, a_, a8_beta8_;
  std::vector<ExactMv> alphas_;
  RealMv a8_real_, a_real_, a8_beta8_real_;
  std::vector<RealMv> alphas_real_;

  std::size_t alpha_rank_ = 0;
  std::vector<Mask> pivot_blades_;
  ExactMatrix pivot_inverse_;
  Eigen::MatrixXd pseudo_inverse_;  // 16 x 256
  Eigen::MatrixXd basis_real_;     // 256 x 16

  std::vector<ExactMatrix> blade_reps_;
  std::vector<Mat16> blade_reps_real_;
};

/// A_8 obtained by expanding the real part of the complex product term by term:
/// every choice of imaginary factors of even count k contributes (-1)^(k/2).
ExactMv expand_a8();

}  // namespace cl8
