#pragma once

// Expression language of the command-line tool:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' '-'? integer)?
//   primary := number | 'o' | 'S' | '(' expr ')'
//            | 'inv(' expr ')' | 'sqrt(' expr ')'
//            | 'pow(' expr ',' rational ')' | 'trunc(' expr ',' integer ')'
//
// Numbers are decimal literals ("3", "0.125"); "1/2" is a division.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "omega/exact_numeric.hpp"
#include "omega/omega_number.hpp"

namespace omega::cli {

struct Expression {
  enum class Kind { kNumber, kO, kSigma, kAdd, kSub, kMul, kDiv, kNeg, kPower, kInv, kSqrt, kPow, kTrunc };

  Kind kind;
  Rational value;  // literal, or the exponent of ^ and pow
  std::size_t count = 0;  // trunc order
  std::vector<std::unique_ptr<Expression>> args;
};

/// Throws ParseError carrying the 1-based column of the offending character.
std::unique_ptr<Expression> parse(std::string_view input);

/// Evaluates with inversions and fractional powers carried to `depth`.
OmegaNumber evaluate(const Expression& e, std::size_t depth);

std::string to_string(const Expression& e);

}  // namespace omega::cli
