#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fsig {

/// Malformed polynomial, ideal, or problem text. Carries a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(format(what, line, column)), message_(what), line_(line), column_(column) {}

  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// Operands live in different rings.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured computation cap was hit. Not a mathematical failure.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant was violated (method disagreement, inexact division
/// that must be exact). Always a bug or an unsound heuristic, never user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The requested mode cannot run on this input (e.g. ratio on a non-F-pure pair).
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fsig
