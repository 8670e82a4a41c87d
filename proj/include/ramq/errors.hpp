#pragma once

#include <stdexcept>
#include <string>

namespace ramq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// A denominator root lies within the real-axis tolerance.
class RealAxisPole : public Error {
 public:
  using Error::Error;
};

class DegreeGapError : public Error {
 public:
  using Error::Error;
};

class ParityError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// Binary jet operation on jets with different base point or order.
class BaseMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroJet : public Error {
 public:
  using Error::Error;
};

/// Leading value of a jet sits on the cut ray arg = -pi/2 of the log branch.
class BranchCut : public Error {
 public:
  using Error::Error;
};

class PoleOrderMismatch : public Error {
 public:
  using Error::Error;
};

class RadiusTooLarge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ramq
