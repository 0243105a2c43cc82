#include "lowdeg/expr.hpp"

#include <cctype>
#include <sstream>

namespace lowdeg {

ParseError::ParseError(const std::string& msg, int line, int column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line), column_(column) {}

Expr Expr::number(Rational v) {
  Expr e;
  e.kind = Kind::Number;
  e.value = std::move(v);
  return e;
}

Expr Expr::atom(Kind k) {
  Expr e;
  e.kind = k;
  return e;
}

Expr Expr::unary(Kind k, Expr a) {
  Expr e;
  e.kind = k;
  e.args.push_back(std::move(a));
  return e;
}

Expr Expr::binary(Kind k, Expr a, Expr b) {
  Expr e;
  e.kind = k;
  e.args.push_back(std::move(a));
  e.args.push_back(std::move(b));
  return e;
}

Expr Expr::power(Expr base, unsigned exponent) {
  Expr e = unary(Kind::Pow, std::move(base));
  e.exponent = exponent;
  return e;
}

namespace {

struct Token {
  enum class Type { Number, Ident, Symbol, End };
  Type type = Type::End;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token tok;
      tok.line = line_;
      tok.column = col_;
      if (pos_ >= src_.size()) {
        out.push_back(tok);
        return out;
      }
      char ch = src_[pos_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        tok.type = Token::Type::Number;
        tok.text = digits();
        if (pos_ < src_.size() && src_[pos_] == '/') {
          advance();
          if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            throw ParseError("expected denominator digits after '/'", line_, col_);
          }
          tok.text += "/" + digits();
        }
      } else if (std::isalpha(static_cast<unsigned char>(ch))) {
        tok.type = Token::Type::Ident;
        while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) {
          tok.text += src_[pos_];
          advance();
        }
        if (tok.text != "t" && tok.text != "i" && tok.text != "j" && tok.text != "k" && tok.text != "eps") {
          throw ParseError("unknown identifier '" + tok.text + "'", tok.line, tok.column);
        }
      } else if (ch == '+' || ch == '-' || ch == '*' || ch == '^' || ch == '(' || ch == ')') {
        tok.type = Token::Type::Symbol;
        tok.text = std::string(1, ch);
        advance();
      } else if (ch == '/') {
        throw ParseError("division is not part of the grammar; write rational literals as p/q", line_, col_);
      } else {
        throw ParseError(std::string("unexpected character '") + ch + "'", line_, col_);
      }
      out.push_back(tok);
    }
  }

private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char ch = src_[pos_];
      if (ch == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string digits() {
    std::string out;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      out += src_[pos_];
      advance();
    }
    return out;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Expr parse() {
    Expr e = expr();
    if (peek().type != Token::Type::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  bool is_symbol(const char* s) const { return peek().type == Token::Type::Symbol && peek().text == s; }
  Token take() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().column);
  }

  Expr expr() {
    Expr lhs = term();
    while (is_symbol("+") || is_symbol("-")) {
      Expr::Kind k = take().text == "+" ? Expr::Kind::Add : Expr::Kind::Sub;
      lhs = Expr::binary(k, std::move(lhs), term());
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = unary();
    while (is_symbol("*")) {
      take();
      lhs = Expr::binary(Expr::Kind::Mul, std::move(lhs), unary());
    }
    return lhs;
  }

  Expr unary() {
    if (is_symbol("-")) {
      take();
      return Expr::unary(Expr::Kind::Neg, unary());
    }
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (is_symbol("^")) {
      take();
      if (peek().type != Token::Type::Number || peek().text.find('/') != std::string::npos) {
        fail("exponent must be a nonnegative integer");
      }
      unsigned long exponent = std::stoul(take().text);
      return Expr::power(std::move(base), static_cast<unsigned>(exponent));
    }
    return base;
  }

  Expr primary() {
    const Token& tok = peek();
    switch (tok.type) {
      case Token::Type::Number:
        return Expr::number(parse_rational(take().text));
      case Token::Type::Ident: {
        std::string name = take().text;
        if (name == "t") return Expr::atom(Expr::Kind::T);
        if (name == "i") return Expr::atom(Expr::Kind::I);
        if (name == "j") return Expr::atom(Expr::Kind::J);
        if (name == "k") return Expr::atom(Expr::Kind::K);
        return Expr::atom(Expr::Kind::Eps);
      }
      case Token::Type::Symbol:
        if (tok.text == "(") {
          take();
          Expr inner = expr();
          if (!is_symbol(")")) fail("expected ')'");
          take();
          return inner;
        }
        fail("unexpected '" + tok.text + "'");
      case Token::Type::End:
        fail("unexpected end of input");
    }
    fail("unreachable");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

DualQuatPoly constant(const Quat& q) { return {QuatPoly::constant(q), QuatPoly{}}; }

}  // namespace

Expr parse_expr(std::string_view src) { return Parser(Lexer(src).run()).parse(); }

DualQuatPoly evaluate(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return constant(Quat(e.value));
    case Expr::Kind::T:
      return {QuatPoly{Quat(), Quat(Rational(1))}, QuatPoly{}};
    case Expr::Kind::I:
      return constant(Quat::unit_i());
    case Expr::Kind::J:
      return constant(Quat::unit_j());
    case Expr::Kind::K:
      return constant(Quat::unit_k());
    case Expr::Kind::Eps:
      return {QuatPoly{}, QuatPoly::constant(Quat(Rational(1)))};
    case Expr::Kind::Neg: {
      DualQuatPoly a = evaluate(e.args[0]);
      return {-a.primal, -a.dual};
    }
    case Expr::Kind::Add:
      return evaluate(e.args[0]) + evaluate(e.args[1]);
    case Expr::Kind::Sub:
      return evaluate(e.args[0]) - evaluate(e.args[1]);
    case Expr::Kind::Mul:
      return evaluate(e.args[0]) * evaluate(e.args[1]);
    case Expr::Kind::Pow: {
      DualQuatPoly base = evaluate(e.args[0]);
      DualQuatPoly out = constant(Quat(Rational(1)));
      for (unsigned i = 0; i < e.exponent; ++i) out = out * base;
      return out;
    }
  }
  throw InconsistencyError("evaluate: unknown node");
}

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return e.value.get_str();
    case Expr::Kind::T:
      return "t";
    case Expr::Kind::I:
      return "i";
    case Expr::Kind::J:
      return "j";
    case Expr::Kind::K:
      return "k";
    case Expr::Kind::Eps:
      return "eps";
    case Expr::Kind::Neg:
      return "(-" + to_string(e.args[0]) + ")";
    case Expr::Kind::Add:
      return "(" + to_string(e.args[0]) + " + " + to_string(e.args[1]) + ")";
    case Expr::Kind::Sub:
      return "(" + to_string(e.args[0]) + " - " + to_string(e.args[1]) + ")";
    case Expr::Kind::Mul:
      return "(" + to_string(e.args[0]) + "*" + to_string(e.args[1]) + ")";
    case Expr::Kind::Pow:
      return "(" + to_string(e.args[0]) + ")^" + std::to_string(e.exponent);
  }
  throw InconsistencyError("to_string: unknown node");
}

DualQuatPoly parse_motion(std::string_view src) { return evaluate(parse_expr(src)); }

std::string format_quat_poly(const QuatPoly& p) {
  if (p.is_zero()) return "0";
  static const char* units[] = {"", "i", "j", "k"};
  std::ostringstream os;
  bool first = true;
  for (int deg = p.degree(); deg >= 0; --deg) {
    Quat c = p.coeff(deg);
    for (int idx = 0; idx < 4; ++idx) {
      const Rational& v = c[idx];
      if (v == 0) continue;
      if (first) {
        if (v < 0) os << "-";
      } else {
        os << (v < 0 ? " - " : " + ");
      }
      first = false;
      std::vector<std::string> factors;
      Rational a = abs(v);
      bool has_rest = idx != 0 || deg > 0;
      if (a != 1 || !has_rest) factors.push_back(a.get_str());
      if (idx != 0) factors.emplace_back(units[idx]);
      if (deg == 1) factors.emplace_back("t");
      if (deg > 1) factors.push_back("t^" + std::to_string(deg));
      for (std::size_t f = 0; f < factors.size(); ++f) os << (f ? "*" : "") << factors[f];
    }
  }
  return os.str();
}

std::string format_motion(const DualQuatPoly& c) {
  if (c.dual.is_zero()) return format_quat_poly(c.primal);
  std::string dual = "eps*(" + format_quat_poly(c.dual) + ")";
  if (c.primal.is_zero()) return dual;
  return format_quat_poly(c.primal) + " + " + dual;
}

}  // namespace lowdeg
