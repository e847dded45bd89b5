#pragma once

#include <stdexcept>
#include <string>

namespace lieidx {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input file or string.
struct ParseError : Error {
  ParseError(const std::string& msg, int line = 0, int column = 0)
      : Error(format(msg, line, column)), line(line), column(column) {}
  int line;
  int column;

 private:
  static std::string format(const std::string& msg, int line, int column) {
    if (line <= 0) return msg;
    std::string s = "line " + std::to_string(line);
    if (column > 0) s += ", column " + std::to_string(column);
    return s + ": " + msg;
  }
};

/// Bad arguments or data: dimension mismatch, invalid algebra, parameter
/// out of range, singular matrix, guard exceeded, search exhausted.
struct DomainError : Error {
  using Error::Error;
};

/// Broken internal invariant: non-exact division inside fraction-free
/// elimination, symbolic/randomized rank disagreement, failed consistency
/// assertion. Always a bug, never a data problem.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace lieidx
