#pragma once

#include <stdexcept>
#include <string>

namespace quon {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Evaluation of a rational function at a root of its denominator.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A polynomial division that was required to be exact left a remainder.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands built over different color counts, lengths or multisets.
class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace quon
