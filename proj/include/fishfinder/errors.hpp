#pragma once

#include <stdexcept>
#include <string>

namespace fishfinder {

// Data-shaped problems (CLI exit code 2).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TooShortError : DataError {
  using DataError::DataError;
};

struct AlignmentError : DataError {
  using DataError::DataError;
};

struct ParseError : DataError {
  using DataError::DataError;
};

struct InsufficientClassError : DataError {
  using DataError::DataError;
};

// Numeric problems (CLI exit code 3).
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateLabelsError : NumericError {
  using NumericError::NumericError;
};

struct DimensionMismatchError : NumericError {
  using NumericError::NumericError;
};

}  // namespace fishfinder
