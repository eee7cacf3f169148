#pragma once

#include <stdexcept>
#include <string>

namespace rdm {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix or vector dimension is zero or inconsistent.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input that only arises on a probability-zero event (e.g. a zero trace).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// A distribution parameter is outside its admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of a formula (e.g. k < n).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Result cannot be represented to the documented accuracy.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Matrix does not have the required structure (square, Hermitian).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An iterative routine failed to converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A spectrum violates the simplex constraints.
class InvalidSpectrumError : public Error {
 public:
  using Error::Error;
};

/// Operation called with arguments that do not fit together.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Malformed external data (table files).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace rdm
