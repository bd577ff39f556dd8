#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace omega {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematically invalid request: division by zero, a point outside a
/// function's domain, an argument violating a type's membership condition.
class MathError : public Error {
 public:
  using Error::Error;
};

/// The operands do not carry enough known coefficients to answer exactly.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// A sequence failed to stabilize within the evaluation budget.
class NotCauchyError : public PrecisionError {
 public:
  using PrecisionError::PrecisionError;
};

/// Malformed text or JSON input. column is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message, std::size_t column = 0) : Error(message), column_(column) {}

  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

}  // namespace omega
