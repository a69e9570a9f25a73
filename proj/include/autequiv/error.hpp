#pragma once

#include <stdexcept>
#include <string>

namespace autequiv {

/// Base class for every error the library reports. The CLI maps the
/// concrete subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "domain"; }
};

/// Invalid arguments: out-of-range vertices, arity mismatches, bad shapes.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input documents (JSON, weight lists).
class ParseError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "parse"; }
};

/// A configured size bound was exceeded (vertex counts, table sizes).
class PolicyError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "policy"; }
};

/// A homomorphism count or matrix product left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "overflow"; }
};

}  // namespace autequiv
