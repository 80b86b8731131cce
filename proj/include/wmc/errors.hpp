#pragma once

#include <stdexcept>
#include <string>

namespace wmc {

/// Base class for every error the counter raises deliberately.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input text violates the DIMACS/weight grammar.
class ParseError : public Error {
public:
  using Error::Error;
};

/// An operation mixed diagrams owned by different node stores.
class StoreMismatch : public Error {
public:
  using Error::Error;
};

/// A variable id outside the store's universe was used.
class UnknownVariable : public Error {
public:
  using Error::Error;
};

/// A value outside the accepted domain (NaN terminal, negative count, ...).
class InvalidValue : public Error {
public:
  using Error::Error;
};

/// Arithmetic left the finite double range during a count.
class CountOverflow : public Error {
public:
  using Error::Error;
};

/// A clustering invariant was broken during a traced run.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

/// Brute-force enumeration refused: too many variables.
class TooManyVariables : public Error {
public:
  using Error::Error;
};

/// Cooperative wall-clock limit hit between cluster steps.
class TimeoutExpired : public Error {
public:
  using Error::Error;
};

}  // namespace wmc
