#pragma once

#include <stdexcept>
#include <string>

namespace ineqlab {

/// Base of every error raised by the library. Callers that only need to
/// report a failure can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Family parameter outside the supported range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Quasi-arithmetic generator failed the monotonicity check.
class GeneratorError : public Error {
 public:
  using Error::Error;
};

/// Iteration cap reached without meeting the tolerance.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// Bracketing root finder given two endpoints of the same sign.
class NoBracket : public Error {
 public:
  using Error::Error;
};

class DerivativeZero : public Error {
 public:
  using Error::Error;
};

class DerivativeSingular : public Error {
 public:
  using Error::Error;
};

/// Index or order beyond the exact-arithmetic guard.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Integer coefficient arithmetic would overflow.
class OverflowGuard : public Error {
 public:
  using Error::Error;
};

class ExtrapolationUnstable : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

/// A series model violates its positivity/monotonicity/antiderivative contract.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace ineqlab
