#pragma once

#include <stdexcept>
#include <string>

namespace noncentral {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid physical input or a regime where a formula does not apply.
/// The CLI maps these to exit code 1.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Potential evaluated within the axis band where sin(theta) ~ 0.
class AxisSingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// nu^2 + B - C < 0 or nu^2 + B + C < 0: lambda would be complex and the
/// bound-state formula does not apply.
class InvalidChannelError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Resolvent requested at an energy at or above the lowest pole of the
/// probed sector; the Euclidean time integrand does not decay.
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Root bracket without a sign change of the quantization function.
class NoRootError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Numerical failure (non-convergence, inadequate grid). CLI exit code 2.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Radial box too small: the highest requested state has not decayed at r_max.
class BoxTooSmallError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace noncentral
