#pragma once

#include <stdexcept>
#include <string>

namespace cartan {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands built over different generator sets.
class PresentationMismatch : public Error {
 public:
  using Error::Error;
};

/// A value has the wrong degree, or an operation needs a homogeneous input.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// A presentation whose differential does not square to zero, or an invalid generator list.
class InvalidPresentation : public Error {
 public:
  using Error::Error;
};

/// The loop model needs V^1 = 0.
class SimplyConnectedError : public Error {
 public:
  using Error::Error;
};

/// Two consecutive slices do not compose to zero.
class NotAComplex : public Error {
 public:
  using Error::Error;
};

class NotACocycle : public Error {
 public:
  using Error::Error;
};

/// Cohomology-level Poincare duality could not be established.
class NoPoincareDuality : public Error {
 public:
  using Error::Error;
};

}  // namespace cartan
