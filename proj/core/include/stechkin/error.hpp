#pragma once

#include <stdexcept>
#include <string>

namespace stechkin {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A value that cannot be represented in binary64 (e.g. a_k^q overflowing).
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Iterative procedure did not reach the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}

  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

// Root bracket without sign change.
class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stechkin
