#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <functional>

#include "lagtor/geometry.hpp"
#include "lagtor/morse.hpp"
#include "lagtor/torus.hpp"

namespace lagtor {

/// Cotangent lift (q, p) -> (Rq, Rp) of a linear reflection R of the ambient
/// space. R fixes a chosen subspace pointwise and negates its orthogonal
/// complement; reflections across great circles and hyperspheres are both of
/// this shape.
class ReflectionInvolution {
 public:
  /// Reflection fixing the column span of `basis` (columns orthonormalized
  /// internally).
  static ReflectionInvolution fixing_subspace(const Eigen::MatrixXd& basis);

  /// Reflection across the great circle through the north pole in direction
  /// v0, i.e. fixing span{N, v0}.
  static ReflectionInvolution great_circle(const FrameAtNorthPole& frame);

  const Eigen::MatrixXd& matrix() const { return refl_; }

  /// Dimension of Fix(R) ∩ S^n, one less than the fixed subspace dimension.
  int fixed_base_dimension() const { return fixed_dim_ - 1; }

  CotangentPoint apply(const CotangentPoint& x) const;
  TangentVector apply(const TangentVector& v) const;

  /// Max-norm residual of R^2 - I.
  double involution_residual() const;

 private:
  Eigen::MatrixXd refl_;
  int fixed_dim_ = 0;
};

CotangentPoint involution_apply(const ReflectionInvolution& inv, const CotangentPoint& x);

/// Max residual of I*lambda = lambda and I*omega = omega over seeded random
/// admissible samples.
double verify_symplectic(const ReflectionInvolution& inv, int samples,
                         std::uint64_t seed, int n = 2);

struct TorusInvarianceReport {
  double max_residual = 0.0;               // |I(phi(t,v)) - phi(t,-v)| over the grid
  double max_fixed_circle_residual = 0.0;  // displacement of the v=0 and v=pi circles
};

/// Verifies that the involution preserves the torus and acts by
/// (t, v) -> (t, -v) in parameter coordinates.
TorusInvarianceReport verify_torus_invariance(const ReflectionInvolution& inv,
                                              int grid_size,
                                              const FrameAtNorthPole& frame);

struct FixedLocusReport {
  int component_count = 0;
  std::array<double, 2> component_v{};      // fiber angles of the two circles
  double membership_residual = 0.0;         // distance of both circles to Fix(I)
  double momentum_opposition_residual = 0.0;  // p1 + p2 at matched base points
};

/// L ∩ Fix(I): the circles v = 0 and v = pi, symmetric to each other under
/// reflection at the zero section.
FixedLocusReport fixed_locus_intersection(const ReflectionInvolution& inv,
                                          const FrameAtNorthPole& frame,
                                          int samples = 256);

/// Parameter fixed-point set of the induced torus map (t,v) -> (t,-v),
/// resolved on a v-grid; returns the fiber angles of the fixed circles.
std::vector<double> induced_action_fixed_circles(int grid_size);

/// Max displacement of the embedded critical points of f under I.
double verify_critical_points_fixed(const ReflectionInvolution& inv,
                                    const MorseFunctionSpec& spec,
                                    const FrameAtNorthPole& frame);

/// Max of |f(t,v) - f(t,-v)| over the grid; zero because cosine is even.
double verify_f_invariance(const MorseFunctionSpec& spec, int grid_size);

/// Same residual for an arbitrary torus function; used as a negative control
/// with odd test functions.
double torus_function_invariance_residual(
    const std::function<double(double, double)>& f, int grid_size);

}  // namespace lagtor
