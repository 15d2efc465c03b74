#pragma once

#include <stdexcept>
#include <string>

namespace symspace {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidType : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class NonHomogeneousInput : public Error {
 public:
  using Error::Error;
};

class VariableMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidParameters : public Error {
 public:
  using Error::Error;
};

class UnsupportedSpace : public Error {
 public:
  using Error::Error;
};

class NotEqualRank : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class DegenerateEulerClass : public Error {
 public:
  using Error::Error;
};

class DegreeAboveTop : public Error {
 public:
  using Error::Error;
};

class DimensionNotDivisibleBy4 : public Error {
 public:
  using Error::Error;
};

class ZeroEulerCharacteristic : public Error {
 public:
  using Error::Error;
};

/// Raised when a polynomial that should be invariant under a reflection
/// group cannot be written in the group's basic invariants.
class NotInvariant : public Error {
 public:
  using Error::Error;
};

}  // namespace symspace
