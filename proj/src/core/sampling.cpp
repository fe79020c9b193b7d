#include "sampling.hpp"

#include <cmath>
#include <numbers>

namespace cl8 {

Rational random_rational(SplitMix64& rng) {
  const long long p = rng.integer(-9, 9);
  const long long q = rng.integer(1, 5);
  return make_rational(p, q);
}

ExactMv random_exact_multivector(SplitMix64& rng, int max_terms) {
  ExactMv out(8);
  const long long terms = rng.integer(1, max_terms);
  for (long long k = 0; k < terms; ++k) {
    const auto mask = static_cast<Mask>(rng.integer(0, 255));
    out.add_term(mask, random_rational(rng));
  }
  return out;
}

std::array<Rational, 8> random_exact_vector(SplitMix64& rng) {
  std::array<Rational, 8> v;
  for (auto& c : v) c = random_rational(rng);
  return v;
}

Vec8 random_gaussian8(SplitMix64& rng) {
  Vec8 v;
  for (int i = 0; i < 8; ++i) v(i) = rng.normal();
  return v;
}

Vec8 random_unit8(SplitMix64& rng) {
  for (;;) {
    const Vec8 v = random_gaussian8(rng);
    const double n = v.norm();
    if (n > 1e-6) return v / n;
  }
}

S6Point random_s6(SplitMix64& rng) {
  for (;;) {
    Vec8 v = random_gaussian8(rng);
    v(0) = 0.0;
    if (v.norm() > 1e-6) return S6Point::normalized(v);
  }
}

GrassmannPoint random_grassmann(SplitMix64& rng) {
  for (;;) {
    const Vec8 u = random_gaussian8(rng);
    const Vec8 w = random_gaussian8(rng);
    const Vec8 wp = w - (w.dot(u) / u.squaredNorm()) * u;
    if (u.norm() > 1e-3 && wp.norm() > 1e-3) return GrassmannPoint::from_frame(u, w);
  }
}

G28Tangent random_g28_tangent(SplitMix64& rng, const GrassmannPoint& x) {
  const auto frame = tangent_frame(x);
  RealMv vec(8);
  for (const auto& t : frame) vec += rng.normal() * t.vec;
  return G28Tangent{x, vec};
}

Vec8 random_s6_tangent(SplitMix64& rng, const S6Point& v) {
  Vec8 x = random_gaussian8(rng);
  x(0) = 0.0;
  x -= x.dot(v.vec()) * v.vec();
  return x;
}

S6Sequence::S6Sequence(std::uint64_t seed) {
  double phi = 1.5;
  for (int it = 0; it < 60; ++it) phi -= (std::pow(phi, 9) - phi - 1.0) / (9.0 * std::pow(phi, 8) - 1.0);
  double a = 1.0;
  for (std::size_t i = 0; i < 8; ++i) {
    a /= phi;
    step_[i] = a - std::floor(a);
  }
  if (seed != 0) {
    SplitMix64 rng(seed, "scan-s6");
    for (auto& s : shift_) s = rng.uniform01();
  }
}

S6Point S6Sequence::at(std::uint64_t n) const {
  std::array<double, 8> p{};
  const double nd = static_cast<double>(n);
  for (std::size_t i = 0; i < 8; ++i) {
    const double t = 0.5 + std::fmod(nd * step_[i], 1.0) + shift_[i];
    p[i] = t - std::floor(t);
  }
  Vec8 v;
  for (std::size_t k = 0; k < 4; ++k) {
    const double r = std::sqrt(-2.0 * std::log(1.0 - p[2 * k]));
    const double ang = 2.0 * std::numbers::pi * p[2 * k + 1];
    v(static_cast<int>(2 * k)) = r * std::cos(ang);
    v(static_cast<int>(2 * k + 1)) = r * std::sin(ang);
  }
  v(0) = 0.0;
  if (v.norm() < 1e-9) v(2) = 1.0;
  return S6Point::normalized(v);
}

}  // namespace cl8
