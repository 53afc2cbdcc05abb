#pragma once

#include <stdexcept>
#include <string>

namespace arboreal {

/// Raised when an operation is called outside its documented domain
/// (degree mismatch, point out of range, malformed input, ...).
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a construction cannot certify its result (group order
/// mismatch, exhausted search budget).
class CertificationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a computation would exceed the configured enumeration cap.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace arboreal
