#pragma once

#include <stdexcept>
#include <string>

namespace kforce {

/// Malformed graph text (graph6 or edge list).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input is larger than an exact solver is allowed to handle.
class ScopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold for the input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace kforce
