#pragma once

#include <stdexcept>
#include <string>

namespace graspkit {

// Error families map onto CLI exit codes: io = 2, validation = 3, numerical = 4.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoFailure : IoError {
  using IoError::IoError;
};

struct MalformedRecord : IoError {
  MalformedRecord(const std::string& what, long record_index)
      : IoError("record " + std::to_string(record_index) + ": " + what),
        record(record_index) {}
  long record;
};

struct DegenerateCloud : ValidationError {
  using ValidationError::ValidationError;
};
struct TooFewPoints : ValidationError {
  using ValidationError::ValidationError;
};
struct MissingNormals : ValidationError {
  using ValidationError::ValidationError;
};
struct NonUnitQuaternion : ValidationError {
  using ValidationError::ValidationError;
};
struct LengthMismatch : ValidationError {
  using ValidationError::ValidationError;
};
struct ShapeMismatch : ValidationError {
  using ValidationError::ValidationError;
};
struct EmptyVote : ValidationError {
  using ValidationError::ValidationError;
};

struct BoundsExhausted : NumericalError {
  using NumericalError::NumericalError;
};
struct NoConsensus : NumericalError {
  using NumericalError::NumericalError;
};

}  // namespace graspkit
