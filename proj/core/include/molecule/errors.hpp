#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace molecule {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (n = 0, bad rotation...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotPrimeError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotSquarefreeError : public DomainError {
 public:
  using DomainError::DomainError;
};

// The input is valid but enumerating it would exceed the configured tuple budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// |Q_j(c)| left the representable range during the critical-orbit recursion.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// A Newton solve or continuation step did not converge.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::size_t depth, std::size_t step)
      : Error(what + " (chain depth " + std::to_string(depth) + ", step " +
              std::to_string(step) + ")"),
        depth_(depth),
        step_(step) {}

  std::size_t depth() const { return depth_; }
  std::size_t step() const { return step_; }

 private:
  std::size_t depth_;
  std::size_t step_;
};

// Newton landed on a center whose primitive period differs from the address period.
class PeriodMismatch : public Error {
 public:
  PeriodMismatch(const std::string& what, unsigned expected, unsigned found)
      : Error(what), expected_(expected), found_(found) {}

  unsigned expected() const { return expected_; }
  unsigned found() const { return found_; }

 private:
  unsigned expected_;
  unsigned found_;
};

}  // namespace molecule
