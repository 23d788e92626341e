#pragma once

#include <stdexcept>
#include <string>

namespace lcs {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
  using Error::Error;
};
struct SingularMatrix : Error {
  using Error::Error;
};
struct ZeroVector : Error {
  using Error::Error;
};
struct IncompatibleInnerProducts : Error {
  using Error::Error;
};
struct DependentInputs : Error {
  using Error::Error;
};
struct InconsistentInput : Error {
  using Error::Error;
};
struct TooLarge : Error {
  using Error::Error;
};
struct CeilingExceeded : Error {
  using Error::Error;
};
struct InconsistentTarget : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct UnknownCode : Error {
  using Error::Error;
};
struct InvalidCode : Error {
  using Error::Error;
};
struct NoCorrection : Error {
  using Error::Error;
};

}  // namespace lcs
