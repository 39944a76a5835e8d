#pragma once

#include <stdexcept>
#include <string>

namespace entwitness {

// Root of every error thrown by the library. The CLI maps each subclass to a
// fixed exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested dense materialization exceeds the configured dimension cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// A scalar argument outside its admissible range (s, p, tolerances, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimensionError : public Error {
 public:
  using Error::Error;
};

// Eigensolver failure or another breakdown of a numerical routine.
class NumericError : public Error {
 public:
  using Error::Error;
};

// A precondition on the shape of a problem does not hold, e.g. a violation
// gap that crosses zero more than once.
class StructureError : public Error {
 public:
  using Error::Error;
};

// An input violates a type invariant (non-Hermitian operator, non-unit
// state, invalid measurement set, inconsistent report values).
class InvariantError : public Error {
 public:
  using Error::Error;
};

// Reading or writing a file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace entwitness
