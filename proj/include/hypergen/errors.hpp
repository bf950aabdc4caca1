#pragma once

#include <stdexcept>
#include <string>

namespace hypergen {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied arguments outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested hypergeometric series does not exist (a nonpositive lower
/// parameter is reached before the series terminates).
class UndefinedHypergeometric : public Error {
 public:
  using Error::Error;
};

/// Dispatch signal: the z-power derivative rule needs c - r >= 1; use
/// prop1_derivative instead.
class UseProposition1 : public Error {
 public:
  using Error::Error;
};

/// The single-branch textbook PGF prefactor is an infinity/infinity form.
class IndeterminateLegacyFormula : public Error {
 public:
  using Error::Error;
};

/// A floating-point evaluation left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// The brute-force oracle was asked for a population above its bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace hypergen
