#pragma once

#include <stdexcept>
#include <string>

namespace mixroots {

enum class ErrorKind {
  invalid_argument,
  zero_polynomial,
  non_isolated,      // identically zero resultant: the zero set has a curve component
  no_convergence,    // univariate root finder hit its sweep cap
  diverged,          // Newton polish exceeded its step budget
  singular_jacobian,
  zero_on_contour,
  malformed_input,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mixroots
