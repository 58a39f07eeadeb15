#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dform {

/// Base class for every error raised by the kernel.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : Error("ambient dimension mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A rational-function coefficient has a vanishing denominator at the
/// requested evaluation point.
class PoleAtPoint : public Error {
 public:
  PoleAtPoint() : Error("denominator vanishes at evaluation point") {}
};

class NotClosed : public Error {
 public:
  NotClosed() : Error("form is not closed") {}
};

class NonPolynomialCoefficient : public Error {
 public:
  NonPolynomialCoefficient()
      : Error("homotopy operator requires polynomial coefficients") {}
};

class NotDivergenceFree : public Error {
 public:
  NotDivergenceFree() : Error("flow is not divergence-free") {}
};

/// Syntax or semantic error while reading an expression. Line and column
/// are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace dform
