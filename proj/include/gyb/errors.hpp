#pragma once

#include <stdexcept>
#include <string>

namespace gyb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix dimension does not match the requested tensor shape or operand.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Partial trace over m >= n factors.
class InvalidPartialTrace : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// Malformed braid word, matrix file, catalog file or complex literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Invalid argument to a domain operation (wrong operator type, bad strand count, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Representation space exceeds the configured size cap.
class ResourceCapError : public Error {
 public:
  using Error::Error;
};

/// Enhancement data violates the commutation condition or is degenerate.
class EnhancementError : public Error {
 public:
  using Error::Error;
};

}  // namespace gyb
