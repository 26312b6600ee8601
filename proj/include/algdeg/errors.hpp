#pragma once

#include <stdexcept>
#include <string>

namespace algdeg {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses onto distinct exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in prime field") {}
};

// Operands come from incompatible rings (variable count, prime or ordering).
class ContextError : public Error {
 public:
  using Error::Error;
};

// Degree of the zero polynomial, or homogenization below the degree of f.
class DegreeError : public Error {
 public:
  using Error::Error;
};

// m > n, m + 1 > n for the minor system, malformed cone shape, ...
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Quotient-ring query on an ideal that is not zero-dimensional.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

// Raised by long computations when the caller's budget is exhausted.
class Timeout : public Error {
 public:
  Timeout() : Error("time budget exhausted") {}
};

}  // namespace algdeg
