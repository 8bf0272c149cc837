#pragma once

#include <stdexcept>
#include <string>

namespace kronwalk {

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested size does not fit the vertex index range or the memory caps.
class CapacityExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An invariant of the numerical evolution was violated (norm drift,
/// step-size underflow, probability outside [0, 1]).
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A closed-form jumping rate divides by zero at the requested size.
class SingularFormula : public std::domain_error {
 public:
  SingularFormula(const std::string& what, std::string fallback)
      : std::domain_error(what), fallback_(std::move(fallback)) {}

  const std::string& fallback() const noexcept { return fallback_; }

 private:
  std::string fallback_;
};

}  // namespace kronwalk
