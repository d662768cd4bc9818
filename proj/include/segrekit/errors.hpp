#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace segrekit {

// Base of every error thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: polynomial text, manifold files, points, flags.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : InputError(format(message, line, column)), detail_(message), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    std::string where = line > 0 ? "line " + std::to_string(line) + ", " : std::string();
    return where + "column " + std::to_string(column) + ": " + message;
  }

  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

// A mathematical precondition failed (point not on manifold, rank drop, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Gröbner computation exceeded a configured cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace segrekit
