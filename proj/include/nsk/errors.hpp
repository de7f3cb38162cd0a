#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nsk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Exponent vectors or matrices of mismatched shape.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// A requested degree, index or layer lies outside the valid window.
class RangeError : public Error {
public:
  using Error::Error;
};

/// An element was expected to lie in a module and does not.
class MembershipError : public Error {
public:
  using Error::Error;
};

/// A caller broke a documented precondition (non-diagonal table, inhomogeneous
/// generators, non-minimal complex, ...).
class ContractError : public Error {
public:
  using Error::Error;
};

/// Arithmetic left the representable range (exponent overflow).
class OverflowError : public Error {
public:
  using Error::Error;
};

/// Malformed textual input. `position()` is the 0-based offset of the
/// offending character.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        mPosition(position) {}

  std::size_t position() const { return mPosition; }

private:
  std::size_t mPosition;
};

} // namespace nsk
