#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace folkman {

/// Malformed graph, signature, table or certificate text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// The node budget of an exhaustive search ran out before a verdict was reached.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t nodes)
      : std::runtime_error("search budget exhausted after " + std::to_string(nodes) + " nodes"),
        nodes_(nodes) {}

  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t nodes_;
};

/// Result contradicting a proven statement; always a bug in the engine or in input data.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace folkman
