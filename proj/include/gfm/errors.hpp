#pragma once

#include <stdexcept>
#include <string>

namespace gfm {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value violates the invariants of the type it is being built into.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Two operands live over different frames.
class FrameMismatch : public Error {
 public:
  using Error::Error;
};

// Dempster combination where every pair of focal sets is disjoint.
class TotalConflict : public Error {
 public:
  using Error::Error;
};

// An observation whose compatible source outcomes carry zero probability.
class ImpossibleObservation : public Error {
 public:
  using Error::Error;
};

// Bayes normalizer is zero.
class ZeroEvidence : public Error {
 public:
  using Error::Error;
};

// A source outcome that cannot produce the observation.
class IncompatibleOutcome : public Error {
 public:
  using Error::Error;
};

// Table handed to the Moebius inversion is not a belief function.
class InvalidBelief : public Error {
 public:
  using Error::Error;
};

// Joint enumeration would exceed the oracle's budget.
class EnumerationLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace gfm
