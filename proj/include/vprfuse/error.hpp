#pragma once

#include <stdexcept>
#include <string>

namespace vprfuse {

// Base of every error raised by the toolkit. Subclasses name the failure
// category so the CLI and tests can tell them apart.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Bad magic, unsupported version or malformed text input.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Payload shorter than the header promises.
class CorruptionError : public Error {
 public:
  using Error::Error;
};

// Non-finite values, inconsistent manifests, out-of-range parameters.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

// A distance vector whose spread is too small to fit the non-match model.
class DegenerateReference : public Error {
 public:
  using Error::Error;
};

// Every reference set that would feed the posterior is degenerate.
class NoInformation : public Error {
 public:
  using Error::Error;
};

}  // namespace vprfuse
