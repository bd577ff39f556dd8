#include "expression.hpp"

#include <cctype>

#include "omega/errors.hpp"

namespace omega::cli {

namespace {

using Ptr = std::unique_ptr<Expression>;

Ptr node(Expression::Kind kind, std::vector<Ptr> args = {}) {
  auto e = std::make_unique<Expression>();
  e->kind = kind;
  e->args = std::move(args);
  return e;
}

Ptr binary(Expression::Kind kind, Ptr lhs, Ptr rhs) {
  std::vector<Ptr> args;
  args.push_back(std::move(lhs));
  args.push_back(std::move(rhs));
  return node(kind, std::move(args));
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Ptr parse_all() {
    Ptr e = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("parse error at column " + std::to_string(pos_ + 1) + ": " + message, pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "'");
    }
  }

  Ptr expr() {
    Ptr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = binary(Expression::Kind::kAdd, std::move(lhs), term());
      } else if (accept('-')) {
        lhs = binary(Expression::Kind::kSub, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  Ptr term() {
    Ptr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = binary(Expression::Kind::kMul, std::move(lhs), unary());
      } else if (accept('/')) {
        lhs = binary(Expression::Kind::kDiv, std::move(lhs), unary());
      } else {
        return lhs;
      }
    }
  }

  Ptr unary() {
    if (accept('-')) {
      std::vector<Ptr> args;
      args.push_back(unary());
      return node(Expression::Kind::kNeg, std::move(args));
    }
    return power();
  }

  Ptr power() {
    Ptr base = primary();
    if (!accept('^')) return base;
    bool negative = accept('-');
    skip_space();
    Integer n = integer_literal();
    std::vector<Ptr> args;
    args.push_back(std::move(base));
    Ptr e = node(Expression::Kind::kPower, std::move(args));
    e->value = negative ? -Rational(n) : Rational(n);
    return e;
  }

  Integer integer_literal() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer::parse(text_.substr(start, pos_ - start));
  }

  // [-] digits [. digits] [/ digits]
  Rational rational_literal() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    std::size_t digits_start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
                                   text_[pos_] == '/')) {
      ++pos_;
    }
    if (digits_start == pos_) fail("expected a rational literal");
    try {
      return Rational::parse(text_.substr(start, pos_ - start));
    } catch (const ParseError&) {
      pos_ = start;
      fail("invalid rational literal");
    }
  }

  Ptr number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      ++pos_;
    }
    Ptr e = node(Expression::Kind::kNumber);
    try {
      e->value = Rational::parse(text_.substr(start, pos_ - start));
    } catch (const ParseError&) {
      pos_ = start;
      fail("invalid number");
    }
    return e;
  }

  Ptr call(Expression::Kind kind) {
    expect('(');
    std::vector<Ptr> args;
    args.push_back(expr());
    Ptr e = node(kind, std::move(args));
    if (kind == Expression::Kind::kPow) {
      expect(',');
      e->value = rational_literal();
    } else if (kind == Expression::Kind::kTrunc) {
      expect(',');
      skip_space();
      Integer n = integer_literal();
      if (!n.fits_long()) fail("truncation order too large");
      e->count = static_cast<std::size_t>(n.to_long());
    }
    expect(')');
    return e;
  }

  Ptr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (c == '(') {
      ++pos_;
      Ptr e = expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (name == "o") return node(Expression::Kind::kO);
      if (name == "S") return node(Expression::Kind::kSigma);
      if (name == "inv") return call(Expression::Kind::kInv);
      if (name == "sqrt") return call(Expression::Kind::kSqrt);
      if (name == "pow") return call(Expression::Kind::kPow);
      if (name == "trunc") return call(Expression::Kind::kTrunc);
      pos_ = start;
      fail("unknown identifier '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<Expression> parse(std::string_view input) { return Parser(input).parse_all(); }

OmegaNumber evaluate(const Expression& e, std::size_t depth) {
  using Kind = Expression::Kind;
  auto arg = [&](std::size_t i) { return evaluate(*e.args[i], depth); };
  switch (e.kind) {
    case Kind::kNumber:
      return OmegaNumber::constant(e.value);
    case Kind::kO:
      return OmegaNumber::o(1);
    case Kind::kSigma:
      return OmegaNumber::sigma(1);
    case Kind::kAdd:
      return add(arg(0), arg(1));
    case Kind::kSub:
      return sub(arg(0), arg(1));
    case Kind::kMul:
      return mul(arg(0), arg(1));
    case Kind::kDiv:
      return divide(arg(0), arg(1), depth);
    case Kind::kNeg:
      return neg(arg(0));
    case Kind::kPower:
    case Kind::kPow:
      return pow_alpha(arg(0), e.value, depth);
    case Kind::kInv:
      return invert(arg(0), depth);
    case Kind::kSqrt:
      return pow_alpha(arg(0), Rational(Integer(1), Integer(2)), depth);
    case Kind::kTrunc:
      return truncate(arg(0), static_cast<Exponent>(e.count));
  }
  throw Error("unknown expression node");
}

std::string to_string(const Expression& e) {
  using Kind = Expression::Kind;
  auto arg = [&](std::size_t i) { return to_string(*e.args[i]); };
  switch (e.kind) {
    case Kind::kNumber:
      return e.value.to_string();
    case Kind::kO:
      return "o";
    case Kind::kSigma:
      return "S";
    case Kind::kAdd:
      return "add(" + arg(0) + ", " + arg(1) + ")";
    case Kind::kSub:
      return "sub(" + arg(0) + ", " + arg(1) + ")";
    case Kind::kMul:
      return "mul(" + arg(0) + ", " + arg(1) + ")";
    case Kind::kDiv:
      return "div(" + arg(0) + ", " + arg(1) + ")";
    case Kind::kNeg:
      return "neg(" + arg(0) + ")";
    case Kind::kPower:
    case Kind::kPow:
      return "pow(" + arg(0) + ", " + e.value.to_string() + ")";
    case Kind::kInv:
      return "inv(" + arg(0) + ")";
    case Kind::kSqrt:
      return "sqrt(" + arg(0) + ")";
    case Kind::kTrunc:
      return "trunc(" + arg(0) + ", " + std::to_string(e.count) + ")";
  }
  return "?";
}

}  // namespace omega::cli
