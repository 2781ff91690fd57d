#pragma once

#include <stdexcept>
#include <string>

namespace pfes {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside the documented domain of an operation.
struct RangeError : Error {
  using Error::Error;
};

/// A rational function that a formula claims to be a polynomial is not one.
/// Inside the library this always indicates a transcription bug.
struct NotPolynomial : Error {
  using Error::Error;
};

struct ZeroDenominator : Error {
  using Error::Error;
  ZeroDenominator() : Error("zero denominator") {}
};

/// A lower parameter of a basic hypergeometric series makes a denominator
/// Pochhammer factor vanish before the series terminates.
struct LowerParamPole : Error {
  using Error::Error;
};

/// A brute-force enumeration would exceed the configured guard.
struct TooLarge : Error {
  using Error::Error;
};

}  // namespace pfes
