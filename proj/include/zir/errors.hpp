#pragma once

#include <stdexcept>
#include <string>

namespace zir {

/// Malformed graph6 or family expression.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A family parameter outside its valid range.
class InvalidSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Order above the 64-vertex cap (or 62 for graph6).
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Exponential search refused because the instance exceeds the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace zir
