// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The carray Authors

#pragma once

#include <stdexcept>
#include <string>

namespace carray {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Validation errors: bad inputs, caught before any numerical work.

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ModeOutOfRange : public InvalidArgument {
 public:
  ModeOutOfRange(int index, const std::string& message)
      : InvalidArgument(message), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

class RangeError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class UnknownPreset : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Numerical errors: inputs were well formed but the computation has no
// meaningful answer.

class NumericalError : public Error {
 public:
  using Error::Error;
};

class DegeneratePattern : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SingularSystem : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Observation point coincides with a radiating element.
class FieldSingularity : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Field magnitude too small along a phase-unwrapping path.
class LowMagnitude : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace carray
