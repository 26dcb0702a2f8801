#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace deltaorder {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed equation text. `position()` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// The operator vanishes identically or has order zero after normalization.
class DegenerateEquation : public Error {
 public:
  using Error::Error;
};

/// Gamma-function pole hit while evaluating a difference power.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A coefficient stream is too short for the requested truncation.
class InsufficientCoefficients : public Error {
 public:
  using Error::Error;
};

class InconsistentInitialData : public Error {
 public:
  using Error::Error;
};

class EmptySolutionSpace : public Error {
 public:
  using Error::Error;
};

/// Too few nonzero coefficients to fit a growth model.
class TooFewTerms : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

class InvalidOrder : public Error {
 public:
  using Error::Error;
};

}  // namespace deltaorder
