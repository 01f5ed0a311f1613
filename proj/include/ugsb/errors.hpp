#pragma once

#include <stdexcept>
#include <string>

namespace ugsb {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inconsistent or malformed parameters / configuration.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Argument outside a formula's domain (zero denominators, non-positive lengths).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the regime where second-order elimination holds.
class PerturbationInvalidError : public Error {
 public:
  using Error::Error;
};

class UnsupportedFrameError : public Error {
 public:
  using Error::Error;
};

/// Step-size underflow, positivity loss and similar integrator failures.
class IntegratorError : public Error {
 public:
  using Error::Error;
};

/// Frequency fit of a numeric trajectory did not converge to a clean oscillation.
class FitError : public Error {
 public:
  using Error::Error;
};

class DegenerateGateError : public Error {
 public:
  using Error::Error;
};

/// A post-run invariant (norm, trace, positivity, unitarity) was violated.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ugsb
