#pragma once

#include <Eigen/Core>

#include "lagtor/errors.hpp"

namespace lagtor {

using Vec = Eigen::VectorXd;

/// Default tolerance for the pointwise constraints |q| = 1 and q.p = 0.
/// Operations accept drift up to this value silently, re-project drift up to
/// 10x, and throw ConstraintViolation beyond that.
inline constexpr double kTolGeom = 1e-12;

/// Point of the unit sphere S^n, ambient coordinates in R^{n+1}.
struct SpherePoint {
  Vec q;
};

/// Point of T*S^n under the round-metric identification: base point q and
/// momentum p with |q| = 1 and q.p = 0.
struct CotangentPoint {
  Vec q;
  Vec p;
};

/// Tangent vector to T*S^n at (q, p), i.e. a pair (dq, dp) satisfying the
/// linearized constraints q.dq = 0 and q.dp + p.dq = 0.
struct TangentVector {
  Vec dq;
  Vec dp;
};

double unit_residual(const Vec& q);
double cotangent_residual(const CotangentPoint& x);
double tangent_residual(const CotangentPoint& x, const TangentVector& v);

/// Normalizes q_raw and removes the q-component of p_raw. Throws
/// ZeroVectorError when |q_raw| <= tol.
CotangentPoint project_to_cotangent(const Vec& q_raw, const Vec& p_raw,
                                    double tol = kTolGeom);

/// Drift policy entry point: returns x unchanged when both residuals are
/// within tol, re-projects when within 10*tol, throws ConstraintViolation
/// beyond that.
CotangentPoint enforce_constraints(const CotangentPoint& x,
                                   double tol = kTolGeom);

/// Orthogonal projection of an arbitrary ambient pair onto the tangent space
/// at x.
TangentVector project_to_tangent(const CotangentPoint& x, const Vec& dq_raw,
                                 const Vec& dp_raw);

/// lambda = p.dq evaluated on v at x.
double canonical_one_form(const CotangentPoint& x, const TangentVector& v,
                          double tol = kTolGeom);

/// dq1.dp2 - dp1.dq2 evaluated on (v1, v2) at x.
double symplectic_form(const CotangentPoint& x, const TangentVector& v1,
                       const TangentVector& v2, double tol = kTolGeom);

/// Euclidean distance between (q, p) pairs in the ambient R^{2(n+1)}.
double ambient_distance(const CotangentPoint& a, const CotangentPoint& b);

}  // namespace lagtor
