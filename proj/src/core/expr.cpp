#include "expr.hpp"

#include <algorithm>
#include <cctype>

#include "error.hpp"
#include "multivector_text.hpp"
#include "spinor.hpp"

namespace cl8 {
namespace {

ExactMatrix scaled(const ExactMatrix& m, const Rational& s) {
  ExactMatrix out = m;
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) *= s;
  return out;
}

bool pure_scalar(const ExactMv& x) {
  return std::all_of(x.terms().begin(), x.terms().end(), [](const auto& t) { return t.first == 0; });
}

class Parser {
 public:
  explicit Parser(std::string_view s) : cur_(s) {}

  ExprValue run() {
    if (cur_.at_end()) cur_.error("empty expression");
    ExprValue v = expr();
    if (!cur_.at_end()) cur_.error("unexpected input");
    return v;
  }

 private:
  ExprValue expr() {
    ExprValue acc = term();
    for (;;) {
      if (cur_.consume('+')) {
        acc = add(acc, term(), false);
      } else if (cur_.consume('-')) {
        acc = add(acc, term(), true);
      } else {
        return acc;
      }
    }
  }

  ExprValue term() {
    ExprValue acc = wedge_level();
    while (cur_.consume('*')) acc = multiply(acc, wedge_level());
    return acc;
  }

  ExprValue wedge_level() {
    ExprValue acc = unary();
    while (cur_.consume('^')) {
      ExprValue rhs = unary();
      if (acc.is_matrix || rhs.is_matrix) cur_.error("'^' needs multivector operands");
      acc.mv = wedge(acc.mv, rhs.mv);
    }
    return acc;
  }

  ExprValue unary() {
    if (cur_.consume('~')) return reversed(unary());
    if (cur_.consume('!')) {
      ExprValue v = unary();
      if (v.is_matrix) cur_.error("'!' needs a multivector operand");
      v.mv = v.mv.grade_involution();
      return v;
    }
    if (cur_.consume('-')) {
      ExprValue v = unary();
      if (v.is_matrix) {
        v.matrix = scaled(v.matrix, Rational(-1));
      } else {
        v.mv = -v.mv;
      }
      return v;
    }
    return primary();
  }

  ExprValue reversed(ExprValue v) {
    if (v.is_matrix) cur_.error("'~' needs a multivector operand");
    v.mv = v.mv.reversion();
    return v;
  }

  ExprValue primary() {
    ExprValue v;
    if (cur_.consume('(')) {
      v = expr();
      cur_.expect(')');
      return v;
    }
    if (cur_.at_number()) {
      v.mv = ExactMv::scalar(cur_.exact_number(), 8);
      return v;
    }
    if (cur_.at_blade()) {
      v.mv = ExactMv::blade(cur_.blade(8), Rational(1), 8);
      return v;
    }
    if (cur_.rest().substr(0, 3) == "rep") {
      cur_.advance(3);
      cur_.expect('(');
      ExprValue arg = expr();
      cur_.expect(')');
      if (arg.is_matrix) cur_.error("rep() needs a multivector argument");
      v.is_matrix = true;
      v.matrix = SpinorStructure::instance().rep(arg.mv);
      return v;
    }
    cur_.error("expected a number, blade, '(' or rep(");
  }

  ExprValue add(ExprValue a, const ExprValue& b, bool subtract) {
    if (a.is_matrix != b.is_matrix) cur_.error("cannot add a matrix and a multivector");
    if (a.is_matrix) {
      a.matrix = subtract ? a.matrix - b.matrix : a.matrix + b.matrix;
    } else {
      a.mv = subtract ? a.mv - b.mv : a.mv + b.mv;
    }
    return a;
  }

  ExprValue multiply(ExprValue a, const ExprValue& b) {
    if (!a.is_matrix && !b.is_matrix) {
      a.mv = a.mv * b.mv;
      return a;
    }
    if (a.is_matrix && b.is_matrix) {
      a.matrix = a.matrix * b.matrix;
      return a;
    }
    const ExprValue& mat = a.is_matrix ? a : b;
    const ExprValue& sc = a.is_matrix ? b : a;
    if (!pure_scalar(sc.mv)) cur_.error("a matrix can only be multiplied by a matrix or a scalar");
    ExprValue out;
    out.is_matrix = true;
    out.matrix = scaled(mat.matrix, sc.mv.coefficient(0));
    return out;
  }

  text::Cursor cur_;
};

}  // namespace

ExprValue evaluate_expression(std::string_view text) { return Parser(text).run(); }

std::string format_matrix(const ExactMatrix& m) {
  std::vector<std::string> cells(m.rows() * m.cols());
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells[r * m.cols() + c] = format_coefficient(m(r, c));
      width = std::max(width, cells[r * m.cols() + c].size());
    }
  }
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string& s = cells[r * m.cols() + c];
      if (c > 0) out += ' ';
      out.append(width - s.size(), ' ');
      out += s;
    }
    out += '\n';
  }
  return out;
}

std::string format_value(const ExprValue& v) {
  return v.is_matrix ? format_matrix(v.matrix) : format_multivector(v.mv) + "\n";
}

}  // namespace cl8
