#include "lagtor/morse.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace lagtor {

namespace {

constexpr double kLocalErrTol = 1e-8;

// Angles of critical coordinates are exactly 0 or pi.
bool is_pi_coord(double theta) { return circle_distance(theta, M_PI) < 0.5; }

}  // namespace

double morse_value(const MorseFunctionSpec& spec, const TorusPoint& pt) {
  return spec.epsilon * (std::cos(pt.t) + std::cos(pt.v));
}

Eigen::Vector2d morse_gradient(const MorseFunctionSpec& spec, const TorusPoint& pt) {
  return {-spec.epsilon * std::sin(pt.t), -spec.epsilon * std::sin(pt.v)};
}

Eigen::Matrix2d morse_hessian(const MorseFunctionSpec& spec, const TorusPoint& pt) {
  Eigen::Matrix2d h = Eigen::Matrix2d::Zero();
  h(0, 0) = -spec.epsilon * std::cos(pt.t);
  h(1, 1) = -spec.epsilon * std::cos(pt.v);
  return h;
}

std::vector<CriticalPoint> critical_points(const MorseFunctionSpec& spec) {
  spec.validate();
  const double angles[2] = {0.0, M_PI};
  std::vector<CriticalPoint> cps;
  for (const double t : angles) {
    for (const double v : angles) {
      const TorusPoint pt{t, v};
      CriticalPoint cp;
      cp.coords = pt;
      cp.value = morse_value(spec, pt);

      if (morse_gradient(spec, pt).cwiseAbs().maxCoeff() > 1e-12) {
        throw NotMorse("critical_points: gradient does not vanish");
      }
      const Eigen::Matrix2d h = morse_hessian(spec, pt);
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(h);
      int negatives = 0;
      for (int i = 0; i < 2; ++i) {
        const double lambda = eig.eigenvalues()[i];
        if (std::abs(lambda) < spec.epsilon / 2.0) {
          throw NotMorse("critical_points: degenerate Hessian");
        }
        if (lambda < 0.0) ++negatives;
      }
      cp.index = negatives;
      cps.push_back(cp);
    }
  }
  std::sort(cps.begin(), cps.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
    return a.index > b.index;
  });
  return cps;
}

double circle_flow_closed_form(double theta0, double epsilon, double s) {
  const double th = wrap_2pi(theta0);
  if (th == 0.0) return 0.0;
  if (th == M_PI) return M_PI;
  const double half = std::tan(th / 2.0);
  const double moved = 2.0 * std::atan(half * std::exp(epsilon * s));
  return wrap_2pi(moved);
}

TorusPoint closed_form_trajectory_point(const TorusPoint& start,
                                        const MorseFunctionSpec& spec, double s) {
  return TorusPoint{circle_flow_closed_form(start.t, spec.epsilon, s),
                    circle_flow_closed_form(start.v, spec.epsilon, s)};
}

namespace {

// Negative-gradient field for the flat metric; both coordinates decouple.
Eigen::Vector2d flow_field(const Eigen::Vector2d& y, double epsilon) {
  return {epsilon * std::sin(y[0]), epsilon * std::sin(y[1])};
}

Eigen::Vector2d rk4_step(const Eigen::Vector2d& y, double h, double epsilon) {
  const Eigen::Vector2d k1 = flow_field(y, epsilon);
  const Eigen::Vector2d k2 = flow_field(y + 0.5 * h * k1, epsilon);
  const Eigen::Vector2d k3 = flow_field(y + 0.5 * h * k2, epsilon);
  const Eigen::Vector2d k4 = flow_field(y + h * k3, epsilon);
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// One accepted interval: step doubling gives the local error estimate, and
// the interval is bisected until the estimate is under budget.
Eigen::Vector2d advance(const Eigen::Vector2d& y, double h, double epsilon, int depth) {
  const Eigen::Vector2d full = rk4_step(y, h, epsilon);
  const Eigen::Vector2d halves = rk4_step(rk4_step(y, 0.5 * h, epsilon), 0.5 * h, epsilon);
  const double err = (halves - full).cwiseAbs().maxCoeff() / 15.0;
  if (err <= kLocalErrTol) return halves;
  if (depth >= 30) {
    throw StepTooLarge("negative_gradient_trajectory: local error above 1e-8");
  }
  const Eigen::Vector2d mid = advance(y, 0.5 * h, epsilon, depth + 1);
  return advance(mid, 0.5 * h, epsilon, depth + 1);
}

}  // namespace

std::vector<TorusPoint> negative_gradient_trajectory(const TorusPoint& start,
                                                     const MorseFunctionSpec& spec,
                                                     double duration, double step) {
  spec.validate();
  if (!(step > 0.0)) throw Error("negative_gradient_trajectory: step must be > 0");
  if (duration == 0.0) return {start};

  const double sign = (duration > 0.0) ? 1.0 : -1.0;
  const double total = std::abs(duration);
  // Reversed time is the same field with flipped sign of epsilon.
  const double eps = sign * spec.epsilon;

  std::vector<TorusPoint> out;
  out.push_back(start);
  Eigen::Vector2d y{start.t, start.v};
  double s = 0.0;
  while (s < total) {
    const double h = std::min(step, total - s);
    y = advance(y, h, eps, 0);
    s += h;
    out.push_back(TorusPoint{wrap_2pi(y[0]), wrap_2pi(y[1])});
  }
  return out;
}

namespace {

struct Classification {
  bool admissible = false;  // a single 0 -> pi transition in one coordinate
  int count = 0;
};

Classification classify_pair(const CriticalPoint& xm, const CriticalPoint& xp) {
  const bool differ_t = circle_distance(xm.coords.t, xp.coords.t) > 0.1;
  const bool differ_v = circle_distance(xm.coords.v, xp.coords.v) > 0.1;
  Classification cl;
  if (differ_t == differ_v) return cl;  // both or neither coordinate moves
  if (differ_t && (is_pi_coord(xm.coords.t) || !is_pi_coord(xp.coords.t))) return cl;
  if (differ_v && (is_pi_coord(xm.coords.v) || !is_pi_coord(xp.coords.v))) return cl;
  // One coordinate runs from the source angle 0 to the sink angle pi; it can
  // do so along either of the two arcs of that circle factor.
  cl.admissible = true;
  cl.count = 2;
  return cl;
}

}  // namespace

FlowLineCount count_flow_lines(const CriticalPoint& x_minus,
                               const CriticalPoint& x_plus,
                               const MorseFunctionSpec& spec) {
  spec.validate();
  if (x_minus.index - x_plus.index != 1) {
    throw IndexGap("count_flow_lines: index difference must be 1");
  }

  const Classification cl = classify_pair(x_minus, x_plus);

  // Shooting: discretize the unstable sphere of x_minus, push every ray to
  // its limit, and count rays arriving at x_plus. Axis directions are kept
  // exact so that invariant circles stay invariant in floating point.
  const double delta = 1e-3;
  std::vector<Eigen::Vector2d> dirs;
  if (x_minus.index == 1) {
    const bool unstable_t = !is_pi_coord(x_minus.coords.t);
    dirs.push_back(unstable_t ? Eigen::Vector2d{1.0, 0.0} : Eigen::Vector2d{0.0, 1.0});
    dirs.push_back(-dirs[0]);
  } else if (x_minus.index == 2) {
    const int rays = 64;
    for (int k = 0; k < rays; ++k) {
      const double alpha = 2.0 * M_PI * k / rays;
      double c = std::cos(alpha);
      double s = std::sin(alpha);
      if (std::abs(c) < 1e-12) c = 0.0;
      if (std::abs(s) < 1e-12) s = 0.0;
      dirs.push_back({c, s});
    }
  } else {
    // Index-0 source has an empty unstable sphere; nothing can flow out.
    if (cl.count != 0) {
      throw ClusterAmbiguity("count_flow_lines: classification disagrees with empty unstable sphere");
    }
    return {0, 0};
  }

  const double duration = 40.0 / spec.epsilon;
  const double step = 0.1 / spec.epsilon;
  const std::vector<CriticalPoint> cps = critical_points(spec);

  int arrived = 0;
  for (const auto& dir : dirs) {
    const TorusPoint start{x_minus.coords.t + delta * dir[0],
                           x_minus.coords.v + delta * dir[1]};
    const std::vector<TorusPoint> traj =
        negative_gradient_trajectory(start, spec, duration, step);
    const TorusPoint limit = traj.back();

    const CriticalPoint* nearest = nullptr;
    double best = 1e100;
    for (const auto& cp : cps) {
      const double d = torus_distance(limit, cp.coords);
      if (d < best) {
        best = d;
        nearest = &cp;
      }
    }
    if (best > 1e-4) {
      throw ClusterAmbiguity("count_flow_lines: a shooting ray did not settle at a critical point");
    }
    if (torus_distance(nearest->coords, x_plus.coords) < 1e-6) ++arrived;
  }

  if (arrived != cl.count) {
    throw ClusterAmbiguity("count_flow_lines: shooting count disagrees with analytic classification");
  }
  return {cl.count, cl.count % 2};
}

void MorseComplex::validate() const {
  const int dim = dimension();
  for (int k = 1; k + 1 <= dim; ++k) {
    const Gf2Matrix square = differential[k] * differential[k + 1];
    if (!square.is_zero()) {
      throw NotAComplex("MorseComplex: differential does not square to zero");
    }
  }
}

MorseComplex morse_differential(const MorseFunctionSpec& spec) {
  const std::vector<CriticalPoint> cps = critical_points(spec);

  MorseComplex c;
  c.generators.assign(3, {});
  for (const auto& cp : cps) c.generators[cp.index].push_back(cp);

  c.differential.assign(3, Gf2Matrix());
  c.flow_line_counts.assign(3, Eigen::MatrixXi());
  for (int k = 1; k <= 2; ++k) {
    const int rows = static_cast<int>(c.generators[k - 1].size());
    const int cols = static_cast<int>(c.generators[k].size());
    Gf2Matrix d(rows, cols);
    Eigen::MatrixXi counts = Eigen::MatrixXi::Zero(rows, cols);
    for (int j = 0; j < cols; ++j) {
      for (int i = 0; i < rows; ++i) {
        const FlowLineCount fc =
            count_flow_lines(c.generators[k][j], c.generators[k - 1][i], spec);
        counts(i, j) = fc.count;
        d(i, j) = static_cast<std::uint8_t>(fc.count_mod2);
      }
    }
    c.differential[k] = d;
    c.flow_line_counts[k] = counts;
  }
  c.validate();
  return c;
}

HomologyResult homology(const MorseComplex& c) {
  c.validate();
  const int dim = c.dimension();
  HomologyResult out;
  out.ranks.resize(dim + 1);
  for (int k = 0; k <= dim; ++k) {
    const int ck = static_cast<int>(c.generators[k].size());
    const int rk = (k >= 1) ? c.differential[k].rank() : 0;
    const int rk1 = (k + 1 <= dim) ? c.differential[k + 1].rank() : 0;
    out.ranks[k] = ck - rk - rk1;
  }
  return out;
}

namespace {

// Per-coordinate piece of an invariant manifold of the separable flow:
// either a single angle or the circle minus one excluded angle.
struct CircleSet {
  bool is_point;
  double angle;  // the point itself, or the excluded angle
};

CircleSet unstable_factor(double crit_coord) {
  if (is_pi_coord(crit_coord)) return {true, M_PI};
  return {false, M_PI};
}

CircleSet stable_factor(double crit_coord) {
  if (is_pi_coord(crit_coord)) return {false, 0.0};
  return {true, 0.0};
}

// empty = -1, point = 0, open arc(s) = 1
int intersect_dimension(const CircleSet& a, const CircleSet& b) {
  if (a.is_point && b.is_point) {
    return (circle_distance(a.angle, b.angle) < 1e-9) ? 0 : -1;
  }
  if (a.is_point) return (circle_distance(a.angle, b.angle) > 1e-9) ? 0 : -1;
  if (b.is_point) return (circle_distance(b.angle, a.angle) > 1e-9) ? 0 : -1;
  return 1;  // circle minus two points: open arcs
}

}  // namespace

MorseSmaleReport verify_morse_smale(const MorseFunctionSpec& spec, int samples) {
  if (samples < 100) throw Error("verify_morse_smale: samples must be >= 100");
  const std::vector<CriticalPoint> cps = critical_points(spec);

  MorseSmaleReport report;
  report.morse_smale = true;
  report.min_margin = M_PI / 2.0;

  for (const auto& x : cps) {
    for (const auto& y : cps) {
      const CircleSet ut = unstable_factor(x.coords.t);
      const CircleSet uv = unstable_factor(x.coords.v);
      const CircleSet st = stable_factor(y.coords.t);
      const CircleSet sv = stable_factor(y.coords.v);

      const int dt = intersect_dimension(ut, st);
      const int dv = intersect_dimension(uv, sv);
      if (dt < 0 || dv < 0) {
        // Empty intersection is the expected outcome whenever the index
        // does not drop (distinct points).
        if (x.index > y.index && classify_pair(x, y).admissible) {
          report.morse_smale = false;
        }
        continue;
      }
      const int dim = dt + dv;
      if (dim != x.index - y.index) {
        report.morse_smale = false;
        continue;
      }

      // Tangent bases are coordinate subspaces; the transversality margin is
      // the asin of the smallest singular value of the stacked bases.
      std::vector<Eigen::Vector2d> stacked;
      if (!ut.is_point) stacked.push_back({1.0, 0.0});
      if (!uv.is_point) stacked.push_back({0.0, 1.0});
      if (!st.is_point) stacked.push_back({1.0, 0.0});
      if (!sv.is_point) stacked.push_back({0.0, 1.0});
      if (stacked.size() < 2) {
        if (x.index != y.index) report.morse_smale = false;
        continue;
      }
      Eigen::MatrixXd m(2, static_cast<int>(stacked.size()));
      for (int c = 0; c < m.cols(); ++c) m.col(c) = stacked[static_cast<std::size_t>(c)];

      // The stacked basis is the same at every point of the intersection for
      // this separable flow, so one SVD covers all requested samples.
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
      const double sigma = std::min(1.0, svd.singularValues().minCoeff());
      const double margin = std::asin(sigma);
      report.min_margin = std::min(report.min_margin, margin);
      if (margin <= 0.0) report.morse_smale = false;
    }
  }
  return report;
}

}  // namespace lagtor
