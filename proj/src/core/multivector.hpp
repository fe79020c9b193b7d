#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <span>
#include <string>

#include "blade.hpp"
#include "error.hpp"
#include "rational.hpp"

namespace cl8 {

template <class T>
struct Ring;

template <>
struct Ring<Rational> {
  static constexpr const char* name = "exact-rational";
  static bool negligible(const Rational& c) { return sgn(c) == 0; }
};

template <>
struct Ring<double> {
  static constexpr const char* name = "approximate-real";
  static constexpr double prune = 1e-12;
  static bool negligible(double c) { return std::abs(c) <= prune; }
};

/// Element of the Clifford algebra Cl_n with e_i e_i = -1, stored as a sparse
/// blade -> coefficient map. The coefficient type is the ring tag: operations
/// between an exact and an approximate multivector do not compile.
template <class T>
class Multivector {
 public:
  using Coeff = T;
  using Terms = std::map<Mask, T>;

  explicit Multivector(int generators = kDefaultGenerators) : n_(generators) { check_generators(n_); }

  static Multivector scalar(const T& c, int generators = kDefaultGenerators) {
    return blade(0, c, generators);
  }

  /// Generator e_index, 1-based.
  static Multivector basis(int index, int generators = kDefaultGenerators) {
    if (index < 1 || index > generators) {
      fail(ErrorCode::InvalidArgument, "generator index " + std::to_string(index) + " outside 1.." +
                                           std::to_string(generators));
    }
    return blade(generator_mask(index), T(1), generators);
  }

  static Multivector blade(Mask m, const T& c, int generators = kDefaultGenerators) {
    Multivector out(generators);
    out.add_term(m, c);
    return out;
  }

  static Multivector vector(std::span<const T> components) {
    Multivector out(static_cast<int>(components.size()));
    for (std::size_t i = 0; i < components.size(); ++i) {
      out.add_term(generator_mask(static_cast<int>(i) + 1), components[i]);
    }
    return out;
  }

  int generators() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  T coefficient(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? T(0) : it->second;
  }

  bool is_even() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return grade(t.first) % 2 == 0; });
  }
  bool is_odd() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return grade(t.first) % 2 == 1; });
  }

  /// Accumulates c into the coefficient of blade m, dropping it if it becomes negligible.
  Multivector& add_term(Mask m, const T& c) {
    if (m >> n_) {
      fail(ErrorCode::InvalidArgument, "blade uses a generator beyond e" + std::to_string(n_));
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) it->second += c;
    if (Ring<T>::negligible(it->second)) terms_.erase(it);
    return *this;
  }

  Multivector grade_project(int k) const {
    Multivector out(n_);
    for (const auto& [m, c] : terms_) {
      if (grade(m) == k) out.terms_.emplace(m, c);
    }
    return out;
  }

  Multivector grade_involution() const { return signed_copy(involution_sign); }
  Multivector reversion() const { return signed_copy(reversion_sign); }

  Multivector& operator+=(const Multivector& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Multivector& operator*=(const T& s) {
    Multivector out(n_);
    for (const auto& [m, c] : terms_) out.add_term(m, c * s);
    *this = std::move(out);
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) { return a *= T(-1); }
  friend Multivector operator*(Multivector a, const T& s) { return a *= s; }
  friend Multivector operator*(const T& s, Multivector a) { return a *= s; }

  /// Geometric product.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.check_same(b);
    Multivector out(a.n_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        const T prod = ca * cb;
        out.add_term(static_cast<Mask>(ma ^ mb), product_sign(ma, mb) < 0 ? T(-prod) : prod);
      }
    }
    return out;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  void check_same(const Multivector& o) const {
    if (o.n_ != n_) {
      fail(ErrorCode::GeneratorMismatch, "generator counts differ: " + std::to_string(n_) + " vs " +
                                             std::to_string(o.n_));
    }
  }

 private:
  static void check_generators(int n) {
    if (n < 1 || n > kMaxGenerators) {
      fail(ErrorCode::InvalidArgument, "generator count must be in 1.." + std::to_string(kMaxGenerators));
    }
  }

  Multivector signed_copy(int (*sign)(Mask)) const {
    Multivector out(n_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, sign(m) < 0 ? T(-c) : c);
    return out;
  }

  int n_;
  Terms terms_;
};

using ExactMv = Multivector<Rational>;
using RealMv = Multivector<double>;

inline RealMv to_real(const ExactMv& a) {
  RealMv out(a.generators());
  for (const auto& [m, c] : a.terms()) out.add_term(m, c.get_d());
  return out;
}

template <class T>
Multivector<T> geometric_product(const Multivector<T>& a, const Multivector<T>& b) {
  return a * b;
}

/// Outer product: the grade-(r+s) part of the product of grade-r and grade-s terms.
template <class T>
Multivector<T> wedge(const Multivector<T>& a, const Multivector<T>& b) {
  a.check_same(b);
  Multivector<T> out(a.generators());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const int s = outer_sign(ma, mb);
      if (s == 0) continue;
      const T prod = ca * cb;
      out.add_term(static_cast<Mask>(ma | mb), s < 0 ? T(-prod) : prod);
    }
  }
  return out;
}

/// Frobenius pairing in which distinct basis blades are orthonormal.
template <class T>
T blade_inner(const Multivector<T>& a, const Multivector<T>& b) {
  a.check_same(b);
  T sum(0);
  for (const auto& [m, c] : a.terms()) {
    auto it = b.terms().find(m);
    if (it != b.terms().end()) sum += c * it->second;
  }
  return sum;
}

template <class T>
double max_abs(const Multivector<T>& a) {
  double out = 0.0;
  for (const auto& [m, c] : a.terms()) out = std::max(out, std::abs(to_double(c)));
  return out;
}

inline double norm(const RealMv& a) { return std::sqrt(blade_inner(a, a)); }

}  // namespace cl8
