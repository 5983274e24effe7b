#pragma once

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lagtor/geometry.hpp"

namespace lagtor {

/// Reduces an angle into [0, 2*pi).
double wrap_2pi(double theta);

/// Geodesic distance on the circle R/2piZ.
double circle_distance(double a, double b);

/// Point of the parameter torus. t is geodesic time, v the fiber-circle
/// angle measured from the distinguished direction v0; both live in
/// [0, 2*pi).
struct TorusPoint {
  double t = 0.0;
  double v = 0.0;

  static TorusPoint wrapped(double t, double v) {
    return TorusPoint{wrap_2pi(t), wrap_2pi(v)};
  }
};

double torus_distance(const TorusPoint& a, const TorusPoint& b);

/// North pole N together with an orthonormal basis e1, ..., en of the fiber
/// over it; v0 = e1 is the distinguished direction.
struct FrameAtNorthPole {
  Vec north;
  std::vector<Vec> fiber;

  /// N = last coordinate axis, fiber = first n coordinate axes of R^{n+1}.
  static FrameAtNorthPole standard(int n);

  int sphere_dim() const { return static_cast<int>(fiber.size()); }
  int ambient_dim() const { return static_cast<int>(north.size()); }
  const Vec& v0() const { return fiber[0]; }

  /// cos(v) e1 + sin(v) e2.
  Vec fiber_direction(double v) const;

  /// -sin(v) e1 + cos(v) e2.
  Vec fiber_direction_derivative(double v) const;

  void validate(double tol = kTolGeom) const;
};

/// Closed-form geodesic flow: rotation by |p| t in the plane span{q, p/|p|}.
/// Throws ZeroMomentum when |p| <= tol.
CotangentPoint geodesic_flow(const CotangentPoint& x, double t,
                             double tol = kTolGeom);

/// phi(t, v) = geodesic flow for time t applied to (N, cos(v) e1 + sin(v) e2).
CotangentPoint torus_embed(const TorusPoint& pt, const FrameAtNorthPole& frame);

/// Closed-form partial derivatives (d phi/dt, d phi/dv) at pt.
std::pair<TangentVector, TangentVector> embedding_differential(
    const TorusPoint& pt, const FrameAtNorthPole& frame);

/// Max of |omega(d_t phi, d_v phi)| over a uniform grid_size x grid_size grid.
double verify_lagrangian(int grid_size, const FrameAtNorthPole& frame);

/// Intersection of the torus with the fiber over q: two parameter points for
/// q away from the poles, a whole circle {(t_c, v)} over each pole.
struct FiberIntersection {
  bool is_circle = false;
  double circle_t = 0.0;                 // valid when is_circle
  std::array<TorusPoint, 2> points{};    // valid when !is_circle
};

FiberIntersection fiber_intersections(const SpherePoint& q,
                                      const FrameAtNorthPole& frame,
                                      double tol = kTolGeom);

enum class GeneratorKind { FiberDisk, GeodesicDisk, SphereClass };

/// Descriptor of one generator of the relative homotopy group of (T*S^2, L).
/// The sphere class carries no boundary loop and no computed invariants.
struct GeneratorDescriptor {
  GeneratorKind kind;
  std::string name;
  bool invariants_computed;
  std::function<CotangentPoint(double)> boundary;  // empty for SphereClass
};

std::vector<GeneratorDescriptor> relative_homotopy_generators(
    const FrameAtNorthPole& frame);

/// Minimum ambient distance between images of non-neighboring grid points,
/// in units of the grid spacing. A bound away from zero certifies
/// embeddedness at sample scale.
double injectivity_margin(int grid_size, const FrameAtNorthPole& frame);

}  // namespace lagtor
