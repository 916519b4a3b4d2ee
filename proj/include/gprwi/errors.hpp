#pragma once

#include <stdexcept>
#include <string>

namespace gprwi {

// One exception type per failure class so callers can catch what they can
// actually handle. Everything derives from Error for the blanket case.

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ArgumentError : Error {
  using Error::Error;
};
struct ShapeError : Error {
  using Error::Error;
};
struct GeometryError : Error {
  using Error::Error;
};
struct StabilityViolation : Error {
  using Error::Error;
};
struct ConstraintError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};
struct FormatError : Error {
  using Error::Error;
};
struct NotFoundError : Error {
  using Error::Error;
};
struct DegenerateTrace : Error {
  using Error::Error;
};
struct DegenerateScan : Error {
  using Error::Error;
};
struct DegenerateBatch : Error {
  using Error::Error;
};
struct GraphError : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};
struct CheckpointError : Error {
  using Error::Error;
};
struct DataError : Error {
  using Error::Error;
};
struct NonFiniteLoss : Error {
  using Error::Error;
};
struct EmptyInput : Error {
  using Error::Error;
};
struct EmptyCatalog : Error {
  using Error::Error;
};

}  // namespace gprwi
