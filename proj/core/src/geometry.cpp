#include "lagtor/geometry.hpp"

#include <cmath>

namespace lagtor {

double unit_residual(const Vec& q) { return std::abs(q.norm() - 1.0); }

double cotangent_residual(const CotangentPoint& x) {
  return std::max(unit_residual(x.q), std::abs(x.q.dot(x.p)));
}

double tangent_residual(const CotangentPoint& x, const TangentVector& v) {
  const double c1 = std::abs(x.q.dot(v.dq));
  const double c2 = std::abs(v.dq.dot(x.p) + x.q.dot(v.dp));
  return std::max(c1, c2);
}

CotangentPoint project_to_cotangent(const Vec& q_raw, const Vec& p_raw,
                                    double tol) {
  const double qn = q_raw.norm();
  if (qn <= tol) {
    throw ZeroVectorError("project_to_cotangent: base vector has zero length");
  }
  CotangentPoint x;
  x.q = q_raw / qn;
  x.p = p_raw - x.q.dot(p_raw) * x.q;
  return x;
}

CotangentPoint enforce_constraints(const CotangentPoint& x, double tol) {
  const double r = cotangent_residual(x);
  if (r <= tol) return x;
  if (r > 10.0 * tol) {
    throw ConstraintViolation("cotangent point drifted beyond 10*tol_geom: residual " +
                              std::to_string(r));
  }
  return project_to_cotangent(x.q, x.p, tol);
}

TangentVector project_to_tangent(const CotangentPoint& x, const Vec& dq_raw,
                                 const Vec& dp_raw) {
  // The two constraint normals (q, 0) and (p, q) are orthogonal to each other
  // because q.p = 0.
  TangentVector v;
  const double a = x.q.dot(dq_raw);
  v.dq = dq_raw - a * x.q;
  v.dp = dp_raw;
  const double b = (v.dq.dot(x.p) + x.q.dot(v.dp)) / (1.0 + x.p.squaredNorm());
  v.dq -= b * x.p;
  v.dp -= b * x.q;
  return v;
}

namespace {

void require_admissible(const CotangentPoint& x, const TangentVector& v,
                        double tol, const char* op) {
  if (cotangent_residual(x) > 10.0 * tol || tangent_residual(x, v) > 10.0 * tol) {
    throw ConstraintViolation(std::string(op) +
                              ": point or tangent vector beyond 10*tol_geom");
  }
}

}  // namespace

double canonical_one_form(const CotangentPoint& x, const TangentVector& v,
                          double tol) {
  require_admissible(x, v, tol, "canonical_one_form");
  return x.p.dot(v.dq);
}

double symplectic_form(const CotangentPoint& x, const TangentVector& v1,
                       const TangentVector& v2, double tol) {
  require_admissible(x, v1, tol, "symplectic_form");
  require_admissible(x, v2, tol, "symplectic_form");
  return v1.dq.dot(v2.dp) - v1.dp.dot(v2.dq);
}

double ambient_distance(const CotangentPoint& a, const CotangentPoint& b) {
  return std::sqrt((a.q - b.q).squaredNorm() + (a.p - b.p).squaredNorm());
}

}  // namespace lagtor
