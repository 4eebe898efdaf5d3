#pragma once

#include <stdexcept>
#include <string>

namespace ogq {

/// Base of every exception thrown by the engine. The C API maps each
/// subclass onto one status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input (partition syntax, fixture grammar, flags).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Precondition violated by the caller (index out of range, non-strict
/// partition, variable-set mismatch, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A Gromov-Witten key or line-number request fails the dimension condition.
class DimensionError : public Error {
 public:
  DimensionError(const std::string& what, int expected_weight, int actual_weight)
      : Error(what), expected_(expected_weight), actual_(actual_weight) {}
  int expected_weight() const { return expected_; }
  int actual_weight() const { return actual_; }

 private:
  int expected_;
  int actual_;
};

/// Exact division left a nonzero remainder.
class IndivisibleError : public Error {
 public:
  using Error::Error;
};

/// A square system that must be nonsingular is not.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

/// The bootstrap could not pin down a requested invariant.
class Underdetermined : public Error {
 public:
  using Error::Error;
};

/// Two derivations of the same invariant disagree.
class InconsistentDerivation : public Error {
 public:
  using Error::Error;
};

/// A deformation fixture fails validation.
class FixtureError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant (non-constant residue, non-integral invariant).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ogq
