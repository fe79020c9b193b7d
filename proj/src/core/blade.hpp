#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace cl8 {

// Bit b set means generator e_{b+1} is a factor; factors are kept in ascending order.
using Mask = std::uint16_t;

inline constexpr int kMaxGenerators = 12;
inline constexpr int kDefaultGenerators = 8;

constexpr int grade(Mask m) { return std::popcount(static_cast<unsigned>(m)); }

// Sign of e_a e_b after sorting the concatenated factor list, including the
// factor -1 from every contracted pair e_i e_i.
constexpr int product_sign(Mask a, Mask b) {
  unsigned swaps = 0;
  for (unsigned x = static_cast<unsigned>(a) >> 1; x != 0; x >>= 1) {
    swaps += std::popcount(x & b);
  }
  swaps += std::popcount(static_cast<unsigned>(a & b));
  return (swaps & 1U) ? -1 : 1;
}

// Sign of the outer product e_a ^ e_b; zero when a factor repeats.
constexpr int outer_sign(Mask a, Mask b) {
  if ((a & b) != 0) return 0;
  return product_sign(a, b);
}

constexpr int reversion_sign(Mask m) {
  const int k = grade(m);
  return ((k * (k - 1) / 2) % 2) ? -1 : 1;
}

constexpr int involution_sign(Mask m) { return (grade(m) % 2) ? -1 : 1; }

constexpr Mask generator_mask(int index) { return static_cast<Mask>(1U << (index - 1)); }

// 1-based generator indices, ascending.
inline std::vector<int> blade_indices(Mask m) {
  std::vector<int> out;
  for (int b = 0; b < kMaxGenerators; ++b) {
    if (m & (1U << b)) out.push_back(b + 1);
  }
  return out;
}

// Canonical display order: by grade, then lexicographic on the index list.
inline bool canonical_less(Mask a, Mask b) {
  if (grade(a) != grade(b)) return grade(a) < grade(b);
  return blade_indices(a) < blade_indices(b);
}

}  // namespace cl8
