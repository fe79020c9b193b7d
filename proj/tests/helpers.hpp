#pragma once

#include <algorithm>
#include <vector>

#include "error.hpp"
#include "multivector.hpp"
#include "multivector_text.hpp"

namespace testing {

inline cl8::ExactMv mv(const char* s, int n = 8) { return cl8::parse_multivector<cl8::Rational>(s, n); }
inline cl8::RealMv rmv(const char* s, int n = 8) { return cl8::parse_multivector<double>(s, n); }

template <class F>
cl8::ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const cl8::Error& e) {
    return e.code();
  }
  return static_cast<cl8::ErrorCode>(0);
}

}  // namespace testing
