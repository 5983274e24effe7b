#pragma once

#include <Eigen/Core>
#include <functional>
#include <vector>

#include "lagtor/geometry.hpp"
#include "lagtor/torus.hpp"

namespace lagtor {

enum class DiskKind { FiberDisk, GeodesicDisk, Constant };

/// One smooth sheet of a disk filling, parametrized over
/// (a, b) in [0,1] x [0,2*pi) and periodic in b. Partials are closed-form.
struct FillingPiece {
  std::function<CotangentPoint(double a, double b)> map;
  std::function<TangentVector(double a, double b)> partial_a;
  std::function<TangentVector(double a, double b)> partial_b;
};

/// A generator disk class: boundary loop on the torus, the tangent planes of
/// L along it, and a piecewise filling stacked along the radial coordinate
/// of the unit parameter disk (piece k covers rho in [k/m, (k+1)/m]).
struct DiskClass {
  DiskKind kind = DiskKind::Constant;
  std::function<CotangentPoint(double theta)> boundary;
  std::function<std::pair<TangentVector, TangentVector>(double theta)> boundary_planes;
  std::vector<FillingPiece> pieces;

  CotangentPoint at(double rho, double theta) const;
};

/// Concrete fillings: the flat disk inside the fiber for FiberDisk, and the
/// momentum-shrink annulus capped by a zero-section hemisphere for
/// GeodesicDisk.
DiskClass build_filling(DiskKind kind, const FrameAtNorthPole& frame);

/// Checks that every boundary sample lies on the embedded torus (via the
/// closed-form fiber intersections); returns the max distance.
double boundary_on_torus_residual(const DiskClass& d, const FrameAtNorthPole& frame,
                                  int resolution);

/// Disk area in the d(lambda) convention, computed by Stokes: oriented
/// boundary integrals of p.dq over each filling piece, seams cancelling.
double symplectic_area(const DiskClass& d, int resolution);

/// The same area by direct 2-form quadrature over the filling sheets;
/// independent integration route used as a cross-check.
double symplectic_area_direct(const DiskClass& d, int resolution);

/// Loop of Lagrangian 2-planes in the standard symplectic R^4; each sample
/// is a 4x2 basis in coordinates (x1, x2, y1, y2).
struct LagrangianPlaneLoop {
  std::vector<Eigen::Matrix<double, 4, 2>> samples;
  int resolution = 0;

  /// Lagrangian within 1e-9, full rank (sigma_min >= 1e-6), consecutive
  /// principal-angle gaps <= pi/8.
  void validate() const;
};

struct TrivializationOptions {
  double base_rho = 0.0;  // base point of the radial transport, parameter disk
  double base_theta = 0.0;
  int transport_steps = 256;
};

/// Tangent planes of L along the disk boundary, written in a symplectic
/// trivialization obtained by Gram-Schmidt-corrected frame transport along
/// straight parameter-disk paths from the base point.
LagrangianPlaneLoop boundary_plane_loop(const DiskClass& d, int resolution,
                                        const TrivializationOptions& opts = {});

/// Winding number of det^2 of the unitarized plane frames.
int maslov_index(const LagrangianPlaneLoop& loop);

/// maslov_index with automatic resolution doubling (up to 2^16 samples) when
/// the winding cannot be snapped to an integer.
int disk_maslov_index(const DiskClass& d, int resolution,
                      const TrivializationOptions& opts = {});

struct MonotonicityReport {
  double constant = 0.0;  // area / index on the geodesic-loop class
  int minimal_maslov = 0;
  double fiber_area = 0.0;
  int fiber_index = 0;
};

/// Verifies the (area, index) pairs of the generator disks and returns the
/// monotonicity constant together with the minimal positive Maslov index.
MonotonicityReport monotonicity_check(const FrameAtNorthPole& frame, int resolution);

/// i(x_minus) - i(x_plus) + n.
int expected_dimension(int i_minus, int i_plus, int n);

}  // namespace lagtor
