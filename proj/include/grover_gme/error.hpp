#pragma once

#include <stdexcept>
#include <string>

namespace grover_gme {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (bad weights, M >= N, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An index or angle outside the admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// The operation cannot be applied to this kind of input, e.g. the
/// symmetric-restricted optimizer on an asymmetric marked set.
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

/// A quantity the formula divides by vanished.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// The dense simulator would need more memory or time than allowed.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace grover_gme
