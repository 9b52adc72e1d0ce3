#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shirshov {

// Malformed textual input. Line and column are 1-based; line is 0 for
// single-line inputs given inline.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(describe(message, line, column)),
        message_(message),
        line_(line),
        column_(column) {}

  // The diagnostic without its position prefix.
  const std::string& message() const noexcept { return message_; }

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string describe(const std::string& message, std::size_t line,
                              std::size_t column) {
    if (line == 0) {
      return "column " + std::to_string(column) + ": " + message;
    }
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + message;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

// An exhaustive search or enumeration would exceed its configured budget.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace shirshov
