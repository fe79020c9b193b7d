#pragma once

#include <Eigen/Dense>

#include "multivector.hpp"

namespace cl8 {

using Vec8 = Eigen::Matrix<double, 8, 1>;
using Mat8 = Eigen::Matrix<double, 8, 8>;
using Vec16 = Eigen::Matrix<double, 16, 1>;
using Mat16 = Eigen::Matrix<double, 16, 16>;

inline Vec8 unit_vector(int index) {  // 1-based
  Vec8 v = Vec8::Zero();
  v(index - 1) = 1.0;
  return v;
}

inline RealMv to_multivector(const Vec8& v) {
  RealMv out(8);
  for (int i = 0; i < 8; ++i) out.add_term(generator_mask(i + 1), v(i));
  return out;
}

inline Vec8 grade1_part(const RealMv& a) {
  Vec8 v;
  for (int i = 0; i < 8; ++i) v(i) = a.coefficient(generator_mask(i + 1));
  return v;
}

// Bivector b = sum_{i<j} b_ij e_i e_j  <->  skew matrix with B(i,j) = b_ij, B(j,i) = -b_ij.
// With this convention u ^ w maps to u w^T - w u^T.
inline Mat8 bivector_to_skew(const RealMv& b) {
  Mat8 m = Mat8::Zero();
  for (const auto& [mask, c] : b.terms()) {
    if (grade(mask) != 2) continue;
    const auto idx = blade_indices(mask);
    m(idx[0] - 1, idx[1] - 1) = c;
    m(idx[1] - 1, idx[0] - 1) = -c;
  }
  return m;
}

inline RealMv skew_to_bivector(const Mat8& m) {
  RealMv out(8);
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      out.add_term(static_cast<Mask>(generator_mask(i + 1) | generator_mask(j + 1)), 0.5 * (m(i, j) - m(j, i)));
  return out;
}

inline RealMv outer(const Vec8& u, const Vec8& w) { return skew_to_bivector(u * w.transpose() - w * u.transpose()); }

}  // namespace cl8
