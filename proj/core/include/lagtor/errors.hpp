#pragma once

#include <stdexcept>
#include <string>

namespace lagtor {

/// Base class of every error thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input vector has (numerically) zero length where a direction is required.
class ZeroVectorError : public Error {
 public:
  using Error::Error;
};

/// A point or tangent vector violates its defining constraints beyond the
/// hard limit of 10 * tol_geom.
class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

/// Geodesic flow requested on a covector of (numerically) zero length.
class ZeroMomentum : public Error {
 public:
  using Error::Error;
};

/// Disk boundary loop fails to close up.
class NonClosedBoundary : public Error {
 public:
  using Error::Error;
};

/// Transported symplectic frame became too ill-conditioned to trust.
class FrameDegeneracy : public Error {
 public:
  using Error::Error;
};

/// Plane-loop sampling too coarse for an unambiguous winding number.
class ResolutionTooLow : public Error {
 public:
  using Error::Error;
};

/// Accumulated winding phase is not close to an integer multiple of 2*pi.
class NonIntegerWinding : public Error {
 public:
  using Error::Error;
};

/// A disk class with zero index carries nonzero area.
class MonotonicityViolation : public Error {
 public:
  using Error::Error;
};

/// ODE step cannot meet the local error budget.
class StepTooLarge : public Error {
 public:
  using Error::Error;
};

/// Flow-line count requested for a pair whose index difference is not 1.
class IndexGap : public Error {
 public:
  using Error::Error;
};

/// Shooting clusters disagree with the analytic flow-line classification.
class ClusterAmbiguity : public Error {
 public:
  using Error::Error;
};

/// Differential matrices do not square to zero over Z/2.
class NotAComplex : public Error {
 public:
  using Error::Error;
};

/// Function spec fails the Morse nondegeneracy guard.
class NotMorse : public Error {
 public:
  using Error::Error;
};

/// Degenerate critical-index pattern (n = 2 passed to the high-dim engine).
class DegenerateIndexPattern : public Error {
 public:
  using Error::Error;
};

/// Two check results share a claim id.
class DuplicateClaim : public Error {
 public:
  using Error::Error;
};

}  // namespace lagtor
