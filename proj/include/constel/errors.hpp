#pragma once

#include <stdexcept>
#include <string>

namespace constel {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact division requested where the divisor does not divide the dividend.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

class NonSquare : public Error {
 public:
  using Error::Error;
};

/// Series inversion (or a negative power) of a series whose constant term is
/// not +1 or -1.
class NonUnitConstant : public Error {
 public:
  using Error::Error;
};

class UnassignedVariable : public Error {
 public:
  using Error::Error;
};

/// A verification routine found a counterexample to an expected identity.
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

class NonUniqueNILP : public Error {
 public:
  using Error::Error;
};

}  // namespace constel
