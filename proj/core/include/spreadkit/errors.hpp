#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spreadkit {

/// Input file could not be parsed. line is 1-based, 0 when not line-specific.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// An exact search ran out of its node budget. Never downgraded to a
/// heuristic answer; callers must treat this as "unknown", not "no".
class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(std::uint64_t budget)
      : std::runtime_error("search budget of " + std::to_string(budget) + " nodes exhausted"),
        budget_(budget) {}

  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

}  // namespace spreadkit
