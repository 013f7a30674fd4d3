#pragma once

#include <stdexcept>
#include <string>

namespace hftlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point or parameter lies outside the mathematical domain (e.g. Im z <= 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input: NaN/Inf values, mismatched sampling, too few nodes.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The contour truncation of an inverse transform is not accurate enough.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, double estimate)
      : Error(what), estimate_(estimate) {}
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

/// exp(+s y / hbar) amplification would exceed the configured guard.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A function does not satisfy an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A negative eigenvalue below tolerance was met while taking a square root.
class PositivityError : public Error {
 public:
  PositivityError(const std::string& what, double eigenvalue)
      : Error(what), eigenvalue_(eigenvalue) {}
  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  double eigenvalue_;
};

class UnsupportedTransformError : public Error {
 public:
  using Error::Error;
};

}  // namespace hftlab
