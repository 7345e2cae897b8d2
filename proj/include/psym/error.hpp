#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace psym {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad modulus, mismatched moduli, or an unsupported prime.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An operand lies outside the subset an operation is defined on (e.g. not in F[x]).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Precondition violation on caller-supplied arguments.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant failed. Reaching this means a bug, or a counterexample.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace psym
