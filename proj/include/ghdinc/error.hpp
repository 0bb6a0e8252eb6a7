#pragma once

#include <stdexcept>
#include <string>

namespace ghdinc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text or JSON input. Line/column are 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(line == 0 ? what
                        : what + " (line " + std::to_string(line) + ", column " +
                              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A caller-supplied argument violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace ghdinc
