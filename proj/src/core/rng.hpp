#pragma once
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace cl8 {

/// SplitMix64 (Steele, Lea, Flood 2014). The whole sample stream of a check is a
/// function of (seed, check id):
///
///   state_0 = seed XOR fnv1a64(id)
///   next():  state += 0x9E3779B97F4A7C15; z = state;
///            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
///            z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
///            return z ^ (z >> 31)
///   split(): a new generator whose state is the next output of this one
///   uniform01(): (next() >> 11) * 2^-53, in [0, 1)
///   normal(): Box-Muller, sqrt(-2 ln(1 - u1)) cos(2 pi u2), two draws per value
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  SplitMix64(std::uint64_t seed, std::string_view label) : state_(seed ^ fnv1a64(label)) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  SplitMix64 split() { return SplitMix64(next()); }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  /// Integer in [lo, hi].
  long long integer(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  double normal() {
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  static constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ULL;
    }
    return h;
  }

 private:
  std::uint64_t state_;
};

}  // namespace cl8
