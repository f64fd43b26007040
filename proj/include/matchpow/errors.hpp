#pragma once

#include <stdexcept>
#include <string>

namespace matchpow {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two values from different ambient rings were combined.
struct AmbientMismatchError : Error {
  using Error::Error;
};

/// An operation that requires a nonzero (or proper) ideal got the zero ideal
/// or the whole ring.
struct ZeroIdealError : Error {
  using Error::Error;
};

/// Variable or vertex index out of range.
struct IndexError : Error {
  using Error::Error;
};

/// A configured size cap was exceeded (exit code 4 in the CLI).
struct CapExceededError : Error {
  using Error::Error;
};

/// An operation that requires generation in a single degree got mixed degrees.
struct MixedDegreeError : Error {
  using Error::Error;
};

/// g_I and verify_core require supp(I) = {1..n}.
struct NotFullySupportedError : Error {
  using Error::Error;
};

/// A weighted oriented graph has a source of weight > 1.
struct WeightError : Error {
  using Error::Error;
};

/// Malformed input file or token.
struct ParseError : Error {
  using Error::Error;
};

/// Precondition violation (bad k, subset not contained, non-prime p, ...).
struct InvalidArgumentError : Error {
  using Error::Error;
};

}  // namespace matchpow
