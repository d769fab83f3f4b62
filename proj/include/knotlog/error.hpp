#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knotlog {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Input is well formed but outside an operation's domain (dimension
// mismatch, unknown column, zero polynomial, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured size guard was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace knotlog
