#pragma once

#include <stdexcept>
#include <string>

namespace mhorn {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands whose sizes do not agree (spectra, matrices, catalogs).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A request beyond a documented implementation bound, e.g. catalogs for n > 8.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A value outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Floating-point failure: non-finite data, lost orthogonality.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Malformed external input (JSON documents, rationals, CLI values).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace mhorn
