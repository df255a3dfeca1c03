#pragma once

#include <stdexcept>
#include <string>

namespace gjts {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands of an exact operation had incompatible dimensions.
class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// Inversion of the zero scalar.
class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero in Q(sqrt2,sqrt3)") {}
};

/// Malformed or schema-violating JSON input. `where` is a path-style locator.
class JsonFormatError : public Error {
public:
  JsonFormatError(const std::string& where, const std::string& what)
      : Error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

private:
  std::string where_;
};

/// Command line misuse (unknown flags, missing arguments, bad parameters).
class UsageError : public Error {
public:
  using Error::Error;
};

}  // namespace gjts
