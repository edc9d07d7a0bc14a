#pragma once

#include <stdexcept>
#include <string>

namespace vhess {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated an operation's preconditions (mismatched rings, bad sizes, singular transforms).
class UsageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A rational coefficient could not be reduced modulo the chosen prime.
class ReductionError : public Error {
 public:
  using Error::Error;
};

/// Randomized sampling kept landing on an exceptional locus.
class GenericityError : public Error {
 public:
  using Error::Error;
};

class SamplingError : public Error {
 public:
  using Error::Error;
};

/// A map was evaluated at a point of its base locus, or a matrix expected nonzero was zero.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

class NotARelationError : public Error {
 public:
  using Error::Error;
};

class NotCanonicalFormError : public Error {
 public:
  using Error::Error;
};

class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace vhess
