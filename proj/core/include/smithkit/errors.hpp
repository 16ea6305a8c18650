#pragma once

#include <stdexcept>
#include <string>

namespace smithkit {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input data: bad indices, non-involutive maps, missing simplices.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A formula or routine was called outside the domain where it holds.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Arguments outside the mathematical domain of a function (e.g. d(n) for n < 2).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Two computations that must agree did not, or a doubled quantity was odd.
// Signals an inconsistent profile or an internal bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Text could not be parsed into one of the file formats.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace smithkit
