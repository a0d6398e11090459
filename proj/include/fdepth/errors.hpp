#ifndef FDEPTH_ERRORS_HPP
#define FDEPTH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fdepth {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inputs that fail validation (bad grids, malformed files, mismatched
// dimensions, out-of-range parameters). The CLI maps these to exit code 2.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

class InvalidGridError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

class DimensionError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

class ParseError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

// Well-formed inputs on which the requested computation is undefined
// (zero bandwidth, too few curves, constant correlation input). The CLI
// maps these to exit code 3.
class DegenerateSampleError : public Error {
 public:
  using Error::Error;
};

class InsufficientSampleError : public DegenerateSampleError {
 public:
  using DegenerateSampleError::DegenerateSampleError;
};

class UndefinedCorrelationError : public DegenerateSampleError {
 public:
  using DegenerateSampleError::DegenerateSampleError;
};

}  // namespace fdepth

#endif  // FDEPTH_ERRORS_HPP
