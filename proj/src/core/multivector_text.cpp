#include "multivector_text.hpp"

#include <charconv>
#include <cctype>
#include <vector>

namespace cl8 {
namespace text {

void Cursor::skip_space() {
  while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
}

bool Cursor::consume(char c) {
  if (peek() != c) return false;
  ++pos_;
  return true;
}

void Cursor::expect(char c) {
  if (!consume(c)) error(std::string("expected '") + c + "'");
}

void Cursor::error(const std::string& what) const {
  fail(ErrorCode::Parse, what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
}

bool Cursor::blade_follows() const {
  const char next = peek_raw(1);
  return next == '{' || (next >= '0' && next <= '9');
}

static std::string_view digit_run(std::string_view s) {
  std::size_t k = 0;
  while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
  return s.substr(0, k);
}

Rational Cursor::exact_number() {
  skip_space();
  const auto num = digit_run(rest());
  if (num.empty()) error("expected an integer or fraction");
  advance(num.size());
  std::string literal(num);
  if (peek_raw() == '/') {
    advance(1);
    const auto den = digit_run(rest());
    if (den.empty()) error("expected a denominator");
    advance(den.size());
    literal += "/" + std::string(den);
  }
  if (peek_raw() == '.') error("decimal coefficients are not exact; use p/q");
  Rational q;
  if (q.set_str(literal, 10) != 0) error("bad number '" + literal + "'");
  if (sgn(q.get_den()) == 0) error("zero denominator");
  q.canonicalize();
  return q;
}

double Cursor::real_number() {
  skip_space();
  const std::string_view r = rest();
  std::size_t k = 0;
  auto digits = [&] {
    while (k < r.size() && std::isdigit(static_cast<unsigned char>(r[k]))) ++k;
  };
  digits();
  if (k < r.size() && r[k] == '.') {
    ++k;
    digits();
  }
  if (k == 0 || (k == 1 && r[0] == '.')) error("expected a number");
  // Exponent only when a digit (optionally signed) follows, so `2*e1` still reads as a blade.
  if (k < r.size() && (r[k] == 'e' || r[k] == 'E')) {
    std::size_t j = k + 1;
    if (j < r.size() && (r[j] == '+' || r[j] == '-')) ++j;
    if (j < r.size() && std::isdigit(static_cast<unsigned char>(r[j]))) {
      k = j;
      digits();
    }
  }
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(r.data(), r.data() + k, value);
  if (ec != std::errc() || ptr != r.data() + k) error("bad number");
  advance(k);
  if (peek_raw() == '/') {
    advance(1);
    const std::string_view r2 = rest();
    std::size_t j = 0;
    while (j < r2.size() && std::isdigit(static_cast<unsigned char>(r2[j]))) ++j;
    if (j == 0) error("expected a denominator");
    double den = 0.0;
    std::from_chars(r2.data(), r2.data() + j, den);
    if (den == 0.0) error("zero denominator");
    advance(j);
    value /= den;
  }
  return value;
}

Mask Cursor::blade(int generators) {
  if (peek() != 'e') error("expected a blade");
  advance(1);
  std::vector<int> idx;
  if (peek_raw() == '{') {
    advance(1);
    while (true) {
      skip_space();
      const auto d = digit_run(rest());
      if (d.empty()) error("expected a generator index");
      advance(d.size());
      idx.push_back(std::stoi(std::string(d)));
      if (consume('}')) break;
      expect(',');
    }
  } else {
    const auto d = digit_run(rest());
    if (d.empty()) error("expected generator digits after 'e'");
    for (char c : d) idx.push_back(c - '0');
    advance(d.size());
  }
  Mask m = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const int g = idx[i];
    if (g < 1 || g > generators) error("generator index " + std::to_string(g) + " outside 1.." +
                                       std::to_string(generators));
    if (i > 0 && g == idx[i - 1]) error("repeated generator index " + std::to_string(g));
    if (i > 0 && g < idx[i - 1]) error("generator indices must be strictly increasing");
    m = static_cast<Mask>(m | generator_mask(g));
  }
  return m;
}

}  // namespace text

namespace {

template <class T>
T read_number(text::Cursor& cur) {
  if constexpr (std::is_same_v<T, Rational>) {
    return cur.exact_number();
  } else {
    return cur.real_number();
  }
}

template <class T>
bool is_negative(const T& c) {
  if constexpr (std::is_same_v<T, Rational>) {
    return sgn(c) < 0;
  } else {
    return c < 0;
  }
}

template <class T>
bool is_unit(const T& c) {
  return c == T(1);
}

}  // namespace

template <class T>
Multivector<T> parse_multivector(std::string_view textv, int generators) {
  text::Cursor cur(textv);
  Multivector<T> out(generators);
  if (cur.at_end()) cur.error("empty multivector");
  bool first = true;
  while (!cur.at_end()) {
    bool negative = false;
    if (cur.consume('+')) {
      negative = false;
    } else if (cur.consume('-')) {
      negative = true;
    } else if (!first) {
      cur.error("expected '+' or '-' between terms");
    }
    first = false;
    T coeff(1);
    Mask m = 0;
    if (cur.at_number()) {
      coeff = read_number<T>(cur);
      if (cur.consume('*')) m = cur.blade(generators);
    } else if (cur.at_blade()) {
      m = cur.blade(generators);
    } else {
      cur.error("expected a term");
    }
    out.add_term(m, negative ? T(-coeff) : coeff);
  }
  return out;
}

std::string format_blade(Mask m) {
  if (m == 0) return "1";
  const auto idx = blade_indices(m);
  const bool braced = idx.back() > 9;
  std::string s = braced ? "e{" : "e";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (braced && i > 0) s += ",";
    s += std::to_string(idx[i]);
  }
  if (braced) s += "}";
  return s;
}

std::string format_coefficient(const Rational& c) { return c.get_str(); }

std::string format_coefficient(double c) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, c);
  return std::string(buf, ptr);
}

template <class T>
std::string format_multivector(const Multivector<T>& a) {
  if (a.is_zero()) return "0";
  std::vector<std::pair<Mask, T>> terms(a.terms().begin(), a.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const bool neg = is_negative(c);
    const T mag = neg ? T(-c) : c;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    if (m == 0) {
      s += format_coefficient(mag);
    } else if (is_unit(mag)) {
      s += format_blade(m);
    } else {
      s += format_coefficient(mag) + "*" + format_blade(m);
    }
  }
  return s;
}

template ExactMv parse_multivector<Rational>(std::string_view, int);
template RealMv parse_multivector<double>(std::string_view, int);
template std::string format_multivector<Rational>(const ExactMv&);
template std::string format_multivector<double>(const RealMv&);

}  // namespace cl8
