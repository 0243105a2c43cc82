#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lowdeg/quat_poly.hpp"

namespace lowdeg {

// Syntax error with a 1-based source position.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, int line, int column);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

// Syntax tree of a dual-quaternion polynomial expression.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' INTEGER)?
//   primary := RATIONAL | 't' | 'i' | 'j' | 'k' | 'eps' | '(' expr ')'
//
// RATIONAL is "p" or "p/q"; there is no division operator. Multiplication is
// non-commutative and left-associative; '#' starts a comment.
struct Expr {
  enum class Kind { Number, T, I, J, K, Eps, Neg, Add, Sub, Mul, Pow };

  Kind kind = Kind::Number;
  Rational value;          // Number
  unsigned exponent = 0;   // Pow
  std::vector<Expr> args;  // operands

  static Expr number(Rational v);
  static Expr atom(Kind k);
  static Expr unary(Kind k, Expr a);
  static Expr binary(Kind k, Expr a, Expr b);
  static Expr power(Expr base, unsigned exponent);
};

Expr parse_expr(std::string_view src);

DualQuatPoly evaluate(const Expr& e);

// Fully parenthesized text that parses back to the same tree.
std::string to_string(const Expr& e);

DualQuatPoly parse_motion(std::string_view src);

// Canonical expanded text, e.g. "t^3 - k*t^2 + t - k + eps*(i*t + j)".
std::string format_motion(const DualQuatPoly& c);
std::string format_quat_poly(const QuatPoly& p);

}  // namespace lowdeg
