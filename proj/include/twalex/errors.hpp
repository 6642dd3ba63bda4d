#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twalex {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed presentation or polynomial text; line/column are 1-based.
class ParseError : public Error {
public:
  ParseError(const std::string &message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// The presentation does not abelianize to Z, so it is not a knot group.
class NotInfiniteCyclic : public Error {
public:
  using Error::Error;
};

/// A zero polynomial was passed where a nonzero one is required.
class ZeroArgument : public Error {
public:
  using Error::Error;
};

/// Subgroup enumeration exceeded its element cap.
class CapExceeded : public Error {
public:
  using Error::Error;
};

/// A coset action does not respect some relator.
class ActionInvalid : public Error {
public:
  using Error::Error;
};

/// A permutation representation does not satisfy some relator.
class RepInvalid : public Error {
public:
  using Error::Error;
};

/// A level-indexed representation of the branched cover is not a homomorphism.
class NotPeriodic : public Error {
public:
  using Error::Error;
};

/// Raised when asked for a finite action of the infinite cyclic cover.
class InfiniteCover : public Error {
public:
  using Error::Error;
};

/// Every generator has a singular denominator block.
class AllDenominatorsVanish : public Error {
public:
  using Error::Error;
};

/// An exact division that must succeed did not. Indicates a bug.
class DivisionFailed : public Error {
public:
  using Error::Error;
};

} // namespace twalex
