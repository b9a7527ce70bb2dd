#pragma once

#include <stdexcept>
#include <string>

namespace affstrat {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Polynomial text could not be parsed. `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A Groebner computation exceeded its S-pair budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A randomized until-loop did not succeed within max_attempts.
class GenericityFailure : public Error {
 public:
  using Error::Error;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// A computed Whitney failure locus is not smaller than the stratum it lives in.
class WhitneyDimensionViolation : public Error {
 public:
  using Error::Error;
};

class DegenerateSelector : public Error {
 public:
  using Error::Error;
};

class SelectorExplosion : public Error {
 public:
  using Error::Error;
};

/// A critical-value component came out as the whole target space.
class NonProperOutput : public Error {
 public:
  using Error::Error;
};

/// Problem file could not be loaded or failed validation.
class LoadError : public Error {
 public:
  using Error::Error;
};

}  // namespace affstrat
