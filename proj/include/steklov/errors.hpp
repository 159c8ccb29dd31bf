#pragma once

#include <stdexcept>
#include <string>

namespace steklov {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside its documented domain (aspect ratio, point
/// outside the rectangle, corner where a normal is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A determining equation was evaluated too close to a pole of its tangent.
class PoleProximityError : public Error {
 public:
  using Error::Error;
};

/// A root iteration could not meet the requested tolerance.
class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A mode identifier is not valid for the rectangle it is resolved on.
class InvalidModeError : public Error {
 public:
  using Error::Error;
};

/// Sampled boundary data does not cover every edge, or is used on a
/// rectangle it was not sampled on.
class SampledDomainError : public Error {
 public:
  using Error::Error;
};

/// Neumann data whose boundary mean is not zero.
class IncompatibleDataError : public Error {
 public:
  using Error::Error;
};

/// Malformed CSV or JSON input.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A quantity cannot be represented as a finite double.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace steklov
