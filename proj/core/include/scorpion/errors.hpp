#pragma once

#include <stdexcept>
#include <string>

namespace scorpion {

/// Malformed graph input. Carries the 1-based line number of the offending
/// line (0 when no line applies, e.g. unexpected end of input).
class parse_error : public std::runtime_error {
public:
  parse_error(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}

  int line() const { return line_; }

private:
  int line_;
};

/// Argument outside an operation's domain (bad k, bad probability, subset
/// out of range, property/graph-kind mismatch, ...).
class parameter_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive computation would exceed its explicit budget.
class budget_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace scorpion
