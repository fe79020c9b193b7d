#pragma once
#include <array>
#include <cstdint>

#include "multivector.hpp"
#include "rng.hpp"
#include "smooth.hpp"
#include "twistor.hpp"

namespace cl8 {

/// Rational p/q with |p| <= 9 and 1 <= q <= 5.
Rational random_rational(SplitMix64& rng);
/// Sum of 1..max_terms random blades of Cl_8 with random rational coefficients.
ExactMv random_exact_multivector(SplitMix64& rng, int max_terms = 6);
std::array<Rational, 8> random_exact_vector(SplitMix64& rng);

Vec8 random_gaussian8(SplitMix64& rng);
/// Uniform on S^7.
Vec8 random_unit8(SplitMix64& rng);
/// Uniform on S^6 = unit vectors orthogonal to e1.
S6Point random_s6(SplitMix64& rng);
/// Plane spanned by two Gaussian vectors.
GrassmannPoint random_grassmann(SplitMix64& rng);
/// Gaussian combination of the 12 frame tangents at x.
G28Tangent random_g28_tangent(SplitMix64& rng, const GrassmannPoint& x);
/// Gaussian tangent vector to S^6 at v.
Vec8 random_s6_tangent(SplitMix64& rng, const S6Point& v);

/// Deterministic low-discrepancy points on S^6: the n-th point of the additive
/// recurrence frac(1/2 + n a_i + s_i), a_i = phi^-i with phi the real root of
/// x^9 = x + 1, i = 1..8, sent to R^8 by Box-Muller on coordinate pairs, with the
/// e1 component dropped and the result normalized. The shift s comes from the
/// seed (s = 0 for seed 0).
class S6Sequence {
 public:
  explicit S6Sequence(std::uint64_t seed = 0);
  S6Point at(std::uint64_t n) const;

 private:
  std::array<double, 8> step_{};
  std::array<double, 8> shift_{};
};

}  // namespace cl8
