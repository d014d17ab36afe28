#pragma once

#include <stdexcept>
#include <string>

namespace supervar {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParams : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct UnknownFamily : Error {
  using Error::Error;
};
struct NoForm : Error {
  using Error::Error;
};
struct NotPolar : Error {
  using Error::Error;
};
struct DegenerateCoefficients : Error {
  using Error::Error;
};
struct ClosureFailure : Error {
  using Error::Error;
};
struct AlgebraMismatch : Error {
  using Error::Error;
};
struct NonSemisimpleH : Error {
  using Error::Error;
};
struct BadPrime : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

}  // namespace supervar
