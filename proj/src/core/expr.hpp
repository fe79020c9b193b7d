#pragma once

#include <string>
#include <string_view>

#include "exact_matrix.hpp"
#include "multivector.hpp"

namespace cl8 {

// Exact expression language over Cl_8:
//   expr    := term (('+' | '-') term)*
//   term    := wedge ('*' wedge)*          geometric product
//   wedge   := unary ('^' unary)*          outer product
//   unary   := ('~' | '!' | '-') unary | primary
//   primary := number | blade | '(' expr ')' | 'rep' '(' expr ')'
// '~' is reversion and '!' the grade involution. rep() gives the 16x16 matrix of
// the spin representation; matrices combine with + - * and scalar factors.
struct ExprValue {
  bool is_matrix = false;
  ExactMv mv{8};
  ExactMatrix matrix;
};

/// Throws Error(Parse) on malformed input or unsupported operand types.
ExprValue evaluate_expression(std::string_view text);

/// Canonical text of a value: the multivector format, or one matrix row per line.
std::string format_value(const ExprValue& v);
std::string format_matrix(const ExactMatrix& m);

}  // namespace cl8
