#pragma once

#include <stdexcept>
#include <string>

namespace gencat {

// Malformed textual input (rational literals, parameter lists).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Arguments outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A floating-point procedure (root finding, quadrature) did not reach its
// tolerance, or two exact routes that must agree did not.
class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gencat
