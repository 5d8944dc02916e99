#pragma once

#include <stdexcept>
#include <string>

namespace hz {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller violated a precondition (argument range, parameter combination).
class UsageError : public Error {
 public:
  using Error::Error;
};

// Argument hits a pole or a point where the function is undefined.
class DomainError : public UsageError {
 public:
  using UsageError::UsageError;
};

// The computation ran but could not meet its accuracy contract
// (quadrature non-convergence, failed internal consistency check, ...).
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace hz
