#pragma once

#include <stdexcept>
#include <string>

namespace phframe {

/// Malformed or invalid input data (CLI exit code 2).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input that is well-formed but outside what an operation supports (exit 3).
class UnsupportedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation at or across a pole of a rational curve (exit 4).
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A motion polynomial that violates the Study condition.
class StudyConditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Degenerate geometric construction (vanishing determinant, zero input).
class DegenerateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace phframe
