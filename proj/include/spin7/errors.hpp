#pragma once

#include <stdexcept>
#include <string>

namespace spin7 {

// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DegreeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Two independent computations that must agree did not.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A built-in sign or orientation convention failed its self-check.
class ConventionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed user input (JSON, matrices, names).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spin7
