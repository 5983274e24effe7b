#pragma once

#include <Eigen/Core>
#include <vector>

#include "lagtor/gf2.hpp"
#include "lagtor/torus.hpp"

namespace lagtor {

/// The invariant Morse function f(t, v) = epsilon (cos t + cos v) on the
/// parameter torus, internal angles.
struct MorseFunctionSpec {
  double epsilon = 0.01;

  void validate() const {
    if (!(epsilon > 0.0)) throw Error("MorseFunctionSpec: epsilon must be > 0");
  }
};

double morse_value(const MorseFunctionSpec& spec, const TorusPoint& pt);
Eigen::Vector2d morse_gradient(const MorseFunctionSpec& spec, const TorusPoint& pt);
Eigen::Matrix2d morse_hessian(const MorseFunctionSpec& spec, const TorusPoint& pt);

struct CriticalPoint {
  TorusPoint coords;
  int index = 0;
  double value = 0.0;
};

/// The four critical points (0,0), (0,pi), (pi,0), (pi,pi) with indices
/// 2, 1, 1, 0, validated against gradient norm and Hessian spectrum.
std::vector<CriticalPoint> critical_points(const MorseFunctionSpec& spec);

/// Closed-form solution of theta' = epsilon sin(theta):
/// tan(theta(s)/2) = tan(theta0/2) exp(epsilon s).
double circle_flow_closed_form(double theta0, double epsilon, double s);

TorusPoint closed_form_trajectory_point(const TorusPoint& start,
                                        const MorseFunctionSpec& spec, double s);

/// Negative-gradient trajectory for the flat metric, adaptive RK4 samples at
/// multiples of `step`. Negative duration integrates the time-reversed flow.
/// Throws StepTooLarge when the local error estimate cannot be brought under
/// 1e-8.
std::vector<TorusPoint> negative_gradient_trajectory(const TorusPoint& start,
                                                     const MorseFunctionSpec& spec,
                                                     double duration,
                                                     double step);

struct FlowLineCount {
  int count = 0;
  int count_mod2 = 0;
};

/// Counts unparametrized flow lines from x_minus to x_plus (index difference
/// one) by shooting from the unstable sphere and clustering limit points,
/// cross-checked against the analytic classification of the separable flow.
FlowLineCount count_flow_lines(const CriticalPoint& x_minus,
                               const CriticalPoint& x_plus,
                               const MorseFunctionSpec& spec);

/// Z/2 Morse complex: generators grouped by index, one differential matrix
/// per adjacent index pair, raw integer counts kept alongside.
struct MorseComplex {
  std::vector<std::vector<CriticalPoint>> generators;  // by degree 0..dim
  std::vector<Gf2Matrix> differential;   // differential[k]: C_k -> C_{k-1}; [0] is empty
  std::vector<Eigen::MatrixXi> flow_line_counts;

  int dimension() const { return static_cast<int>(generators.size()) - 1; }

  /// Throws NotAComplex unless every composite vanishes over Z/2.
  void validate() const;
};

MorseComplex morse_differential(const MorseFunctionSpec& spec);

struct HomologyResult {
  std::vector<int> ranks;

  int euler_characteristic() const {
    int chi = 0;
    int sign = 1;
    for (const int r : ranks) {
      chi += sign * r;
      sign = -sign;
    }
    return chi;
  }
};

/// Betti numbers over Z/2 via rank H_k = dim C_k - rank d_k - rank d_{k+1}.
HomologyResult homology(const MorseComplex& c);

struct MorseSmaleReport {
  bool morse_smale = false;
  double min_margin = 0.0;  // radians
};

/// Checks transversality of every unstable/stable intersection using the
/// product-of-arcs description of the separable flow; the margin is the
/// asin of the smallest singular value of the stacked tangent bases at
/// sampled intersection points.
MorseSmaleReport verify_morse_smale(const MorseFunctionSpec& spec, int samples);

}  // namespace lagtor
