#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracdim {

/// Invalid data or an unrepresentable request (bad schedule, out-of-range
/// coordinate, accumulator overflow, ...). The CLI maps these to a clean
/// diagnostic and a nonzero exit.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text. Carries the 1-based line number and, when known,
/// the 1-based field (column) within the line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column = 0)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    std::string msg = what + " (line " + std::to_string(line);
    if (column != 0) msg += ", column " + std::to_string(column);
    msg += ")";
    return msg;
  }

  std::size_t line_;
  std::size_t column_;
};

namespace detail {

/// Precondition check. Violations are programming errors, not data errors.
inline void require(bool condition, const char* message) {
  if (!condition) throw std::logic_error(message);
}

}  // namespace detail
}  // namespace fracdim
