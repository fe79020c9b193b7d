#pragma once

#include <string>
#include <string_view>

#include "multivector.hpp"

namespace cl8 {

// Text grammar: signed terms `coeff*e<digits>`, a bare coefficient, or a bare
// blade, e.g. `1 + 3/2*e13 - e2478`. Blade digits list generator indices in
// strictly increasing order; indices above 9 use the braced form `e{1,10,12}`.
// Exact coefficients are integers or fractions p/q; approximate coefficients
// additionally accept decimal and exponent notation.

template <class T>
Multivector<T> parse_multivector(std::string_view text, int generators = kDefaultGenerators);

template <class T>
std::string format_multivector(const Multivector<T>& a);

std::string format_blade(Mask m);
std::string format_coefficient(const Rational& c);
std::string format_coefficient(double c);

namespace text {

// Character cursor shared by the multivector grammar and the expression evaluator.
class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_space();
  bool at_end() { skip_space(); return pos_ >= s_.size(); }
  char peek() { skip_space(); return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char peek_raw() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char peek_raw(std::size_t ahead) const { return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0'; }
  bool consume(char c);
  void expect(char c);
  std::size_t position() const { return pos_; }
  std::string_view rest() const { return s_.substr(pos_); }
  void advance(std::size_t k) { pos_ += k; }

  bool at_number() { const char c = peek(); return (c >= '0' && c <= '9') || c == '.'; }
  bool at_blade() { return peek() == 'e' && blade_follows(); }

  /// Parses an unsigned coefficient literal.
  Rational exact_number();
  double real_number();
  /// Parses `e<digits>` or `e{i,j,...}` and validates it against the generator count.
  Mask blade(int generators);

  [[noreturn]] void error(const std::string& what) const;

 private:
  bool blade_follows() const;

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace text
}  // namespace cl8
