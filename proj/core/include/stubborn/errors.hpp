#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stubborn {

// Base for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input (bad syntax, wrong arity, invalid arguments). CLI exit code 1.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : InputError(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

// The mathematics does not apply (non-isolated zero, unsupported field, ...).
// CLI exit code 2.
class InapplicableError : public Error {
 public:
  using Error::Error;
};

class UnsupportedExtension : public InapplicableError {
 public:
  using InapplicableError::InapplicableError;
};

class NonIsolatedZero : public InapplicableError {
 public:
  using InapplicableError::InapplicableError;
};

// Mixing two different quadratic fields in one computation.
class FieldMismatch : public UnsupportedExtension {
 public:
  using UnsupportedExtension::UnsupportedExtension;
};

}  // namespace stubborn
