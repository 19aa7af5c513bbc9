#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropical {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension or orientation mismatch.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A value lies outside the semiring (or span) an operation requires.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operation's stated precondition does not hold for its arguments.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A postcondition the library verifies failed. Indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace tropical
