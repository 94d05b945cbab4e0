#pragma once

#include <stdexcept>
#include <string>

namespace hodge {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands with incompatible shapes (matrix sizes, ambient dimensions).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Requested data is not present (unknown ring, missing product table, ...).
class MissingDataError : public Error {
 public:
  using Error::Error;
};

// A file could not be opened or read.
class FileError : public MissingDataError {
 public:
  using MissingDataError::MissingDataError;
};

}  // namespace hodge
