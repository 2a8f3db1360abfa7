#pragma once

#include <stdexcept>
#include <string>

namespace gljunction {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameters or configuration (CLI exit code 2).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Field size does not match the problem it is evaluated on.
class GridMismatch : public Error {
 public:
  using Error::Error;
};

/// Iteration budget exhausted (CLI exit code 3).
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// Line search failed and the energy went up.
class DivergedEnergy : public Error {
 public:
  using Error::Error;
};

class OvershootBeyondTolerance : public Error {
 public:
  using Error::Error;
};

class OutOfTube : public Error {
 public:
  using Error::Error;
};

class EmptyRegion : public Error {
 public:
  using Error::Error;
};

class WindowTooNarrow : public Error {
 public:
  using Error::Error;
};

class NonPositiveValues : public Error {
 public:
  using Error::Error;
};

class InsufficientRuns : public Error {
 public:
  using Error::Error;
};

}  // namespace gljunction
