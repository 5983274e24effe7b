#include "lagtor/highdim.hpp"

#include <cmath>

#include "lagtor/random.hpp"

namespace lagtor {

HighDimConfig HighDimConfig::standard(int n) {
  HighDimConfig cfg;
  cfg.n = n;
  cfg.frame = FrameAtNorthPole::standard(n);
  cfg.validate();
  return cfg;
}

void HighDimConfig::validate() const {
  if (n < 2) throw Error("HighDimConfig: n must be >= 2");
  frame.validate();
  if (frame.sphere_dim() != n) throw Error("HighDimConfig: frame dimension mismatch");
}

CotangentPoint highdim_embed(double t, const Vec& v, const HighDimConfig& cfg) {
  cfg.validate();
  if (std::abs(v.norm() - 1.0) > 10.0 * kTolGeom || std::abs(v.dot(cfg.frame.north)) > 10.0 * kTolGeom) {
    throw ConstraintViolation("highdim_embed: fiber direction must be unit and orthogonal to N");
  }
  return geodesic_flow(CotangentPoint{cfg.frame.north, v}, t);
}

namespace {

// Orthonormal basis of the tangent space of the fiber sphere at v.
std::vector<Vec> fiber_sphere_tangent_basis(const Vec& v, const HighDimConfig& cfg) {
  std::vector<Vec> basis;
  for (const Vec& e : cfg.frame.fiber) {
    Vec u = e - e.dot(v) * v;
    for (const Vec& w : basis) u -= u.dot(w) * w;
    const double n = u.norm();
    if (n > 1e-8) basis.push_back(u / n);
    if (static_cast<int>(basis.size()) == cfg.n - 1) break;
  }
  if (static_cast<int>(basis.size()) != cfg.n - 1) {
    throw Error("fiber sphere tangent basis: degenerate direction");
  }
  return basis;
}

}  // namespace

std::vector<TangentVector> highdim_embedding_basis(double t, const Vec& v,
                                                   const HighDimConfig& cfg) {
  const CotangentPoint x = highdim_embed(t, v, cfg);
  std::vector<TangentVector> basis;
  basis.push_back(TangentVector{x.p, -x.q});  // flow direction
  const double st = std::sin(t);
  const double ct = std::cos(t);
  for (const Vec& u : fiber_sphere_tangent_basis(v, cfg)) {
    basis.push_back(TangentVector{st * u, ct * u});
  }
  return basis;
}

double highdim_lagrangian_residual(const HighDimConfig& cfg, long samples,
                                   std::uint64_t seed) {
  cfg.validate();
  Sampler rng(seed);
  const int t_grid = 32;
  const long per_t = std::max<long>(1, samples / t_grid);
  double worst = 0.0;
  for (int i = 0; i < t_grid; ++i) {
    const double t = 2.0 * M_PI * i / t_grid;
    for (long s = 0; s < per_t; ++s) {
      Vec v = Vec::Zero(cfg.n + 1);
      for (const Vec& e : cfg.frame.fiber) v += rng.gaussian() * e;
      const double n = v.norm();
      if (n < 1e-8) continue;
      v /= n;
      const CotangentPoint x = highdim_embed(t, v, cfg);
      const std::vector<TangentVector> basis = highdim_embedding_basis(t, v, cfg);
      for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = a + 1; b < basis.size(); ++b) {
          worst = std::max(worst, std::abs(symplectic_form(x, basis[a], basis[b])));
        }
      }
    }
  }
  return worst;
}

HypersphereDiagnosis hypersphere_reflection_diagnosis(const HighDimConfig& cfg) {
  cfg.validate();
  // Hyperplane through N spanned by all fiber directions but the last.
  Eigen::MatrixXd basis(cfg.n + 1, cfg.n);
  basis.col(0) = cfg.frame.north;
  for (int i = 0; i + 1 < cfg.n; ++i) basis.col(i + 1) = cfg.frame.fiber[static_cast<std::size_t>(i)];
  const ReflectionInvolution inv = ReflectionInvolution::fixing_subspace(basis);

  HypersphereDiagnosis diag;
  diag.fix_base_dimension = inv.fixed_base_dimension();
  diag.approach_fails = diag.fix_base_dimension > 1;
  diag.involution_residual = inv.involution_residual();
  return diag;
}

CriticalGeodesicReflectionReport critical_geodesic_reflection(const HighDimConfig& cfg, int samples,
                                              std::uint64_t seed) {
  cfg.validate();
  Eigen::MatrixXd basis(cfg.n + 1, 2);
  basis.col(0) = cfg.frame.north;
  basis.col(1) = cfg.frame.v0();

  CriticalGeodesicReflectionReport rep{ReflectionInvolution::fixing_subspace(basis), 0, 0.0, 0.0};
  rep.fix_base_dimension = rep.involution.fixed_base_dimension();

  Sampler rng(seed);
  for (int s = 0; s < samples; ++s) {
    const double t = rng.uniform(0.0, 2.0 * M_PI);
    Vec v = Vec::Zero(cfg.n + 1);
    for (const Vec& e : cfg.frame.fiber) v += rng.gaussian() * e;
    if (v.norm() < 1e-8) continue;
    v /= v.norm();
    const CotangentPoint lhs = rep.involution.apply(highdim_embed(t, v, cfg));
    const CotangentPoint rhs = highdim_embed(t, rep.involution.matrix() * v, cfg);
    rep.l_invariance_residual = std::max(rep.l_invariance_residual, ambient_distance(lhs, rhs));
  }

  for (const double t : {0.0, M_PI}) {
    for (const double sign : {1.0, -1.0}) {
      const CotangentPoint x = highdim_embed(t, sign * cfg.frame.v0(), cfg);
      rep.critical_point_displacement = std::max(
          rep.critical_point_displacement, ambient_distance(rep.involution.apply(x), x));
    }
  }
  return rep;
}

namespace {

struct HighDimCritical {
  double t = 0.0;   // 0 or pi
  int sign = 1;     // +1 for +v0, -1 for -v0 in the fiber sphere
  int index = 0;
};

// A rigid line exists exactly when only the circle factor moves, from its
// source angle 0 to its sink angle pi; then there are two, one per arc.
int analytic_line_count(const HighDimCritical& from, const HighDimCritical& to) {
  const bool differ_t = circle_distance(from.t, to.t) > 0.1;
  const bool differ_v = from.sign != to.sign;
  if (differ_t && !differ_v && from.t < 0.1 && std::abs(to.t - M_PI) < 0.1) return 2;
  return 0;
}

struct ProductFlowState {
  double t;
  Vec v;
};

ProductFlowState product_flow_rk4(const ProductFlowState& y0, double epsilon,
                                  const Vec& height_axis, double duration, double step) {
  auto field_t = [epsilon](double t) { return epsilon * std::sin(t); };
  auto field_v = [epsilon, &height_axis](const Vec& v) -> Vec {
    return -epsilon * (height_axis - height_axis.dot(v) * v);
  };
  ProductFlowState y = y0;
  double s = 0.0;
  while (s < duration) {
    const double h = std::min(step, duration - s);
    const double k1t = field_t(y.t);
    const Vec k1v = field_v(y.v);
    const double k2t = field_t(y.t + 0.5 * h * k1t);
    const Vec k2v = field_v(y.v + 0.5 * h * k1v);
    const double k3t = field_t(y.t + 0.5 * h * k2t);
    const Vec k3v = field_v(y.v + 0.5 * h * k2v);
    const double k4t = field_t(y.t + h * k3t);
    const Vec k4v = field_v(y.v + h * k3v);
    y.t += (h / 6.0) * (k1t + 2.0 * k2t + 2.0 * k3t + k4t);
    y.v += (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    y.v /= y.v.norm();
    s += h;
  }
  return y;
}

int shooting_line_count(const HighDimCritical& from, const HighDimCritical& to,
                        const HighDimConfig& cfg, double epsilon) {
  const Vec axis = cfg.frame.v0();
  const Vec v_from = from.sign * axis;
  const bool t_unstable = from.t < 0.1;
  const bool v_unstable = from.sign > 0;

  // Rays off the unstable sphere; axis rays are exact so invariant
  // submanifolds stay invariant in floating point.
  const double delta = 1e-3;
  std::vector<ProductFlowState> starts;
  if (t_unstable) {
    starts.push_back({from.t + delta, v_from});
    starts.push_back({from.t - delta, v_from});
  }
  if (v_unstable) {
    for (const Vec& u : fiber_sphere_tangent_basis(v_from, cfg)) {
      for (const double sgn : {1.0, -1.0}) {
        Vec v = v_from + sgn * delta * u;
        starts.push_back({from.t, v / v.norm()});
      }
    }
    if (t_unstable) {
      // Mixed directions drain into lower strata; sample a few to make sure
      // they do not cluster at the target.
      for (const Vec& u : fiber_sphere_tangent_basis(v_from, cfg)) {
        Vec v = v_from + (delta / std::sqrt(2.0)) * u;
        starts.push_back({from.t + delta / std::sqrt(2.0), v / v.norm()});
      }
    }
  }

  const double duration = 40.0 / epsilon;
  const double step = 0.02 / epsilon;
  const HighDimCritical targets[4] = {
      {0.0, +1, 0}, {0.0, -1, 0}, {M_PI, +1, 0}, {M_PI, -1, 0}};

  int arrived = 0;
  for (const auto& y0 : starts) {
    const ProductFlowState limit = product_flow_rk4(y0, epsilon, axis, duration, step);
    const HighDimCritical* nearest = nullptr;
    double best = 1e100;
    for (const auto& c : targets) {
      const double d = circle_distance(limit.t, c.t) + (limit.v - c.sign * axis).norm();
      if (d < best) {
        best = d;
        nearest = &c;
      }
    }
    if (best > 1e-4) {
      throw ClusterAmbiguity("highdim shooting: ray did not settle at a critical point");
    }
    if (circle_distance(nearest->t, to.t) < 1e-9 && nearest->sign == to.sign) ++arrived;
  }
  return arrived;
}

}  // namespace

HighDimMorseData highdim_morse_complex(const HighDimConfig& cfg, double epsilon) {
  cfg.validate();
  if (!(epsilon > 0.0)) throw Error("highdim_morse_complex: epsilon must be > 0");
  if (cfg.n == 2) {
    throw DegenerateIndexPattern(
        "highdim_morse_complex: indices collide for n = 2; use the torus engine");
  }

  const int n = cfg.n;
  const HighDimCritical crits[4] = {
      {0.0, +1, n},          // both factors at their maximum
      {M_PI, +1, n - 1},
      {0.0, -1, 1},
      {M_PI, -1, 0}};

  HighDimMorseData data;
  data.complex.generators.assign(static_cast<std::size_t>(n) + 1, {});
  for (const auto& c : crits) {
    CriticalPoint cp;
    // Fiber coordinate recorded as the angle along the v0-axis: 0 for +v0,
    // pi for -v0.
    cp.coords = TorusPoint{c.t, (c.sign > 0) ? 0.0 : M_PI};
    cp.index = c.index;
    cp.value = epsilon * (std::cos(c.t) + c.sign);
    data.complex.generators[static_cast<std::size_t>(c.index)].push_back(cp);
  }

  data.complex.differential.assign(static_cast<std::size_t>(n) + 1, Gf2Matrix());
  data.complex.flow_line_counts.assign(static_cast<std::size_t>(n) + 1, Eigen::MatrixXi());

  auto crit_at = [&](int index, int which) -> const HighDimCritical& {
    int seen = 0;
    for (const auto& c : crits) {
      if (c.index == index && seen++ == which) return c;
    }
    throw Error("highdim_morse_complex: generator lookup failed");
  };

  for (int k = 1; k <= n; ++k) {
    const int rows = static_cast<int>(data.complex.generators[static_cast<std::size_t>(k) - 1].size());
    const int cols = static_cast<int>(data.complex.generators[static_cast<std::size_t>(k)].size());
    Gf2Matrix d(rows, cols);
    Eigen::MatrixXi counts = Eigen::MatrixXi::Zero(rows, cols);
    for (int j = 0; j < cols; ++j) {
      for (int i = 0; i < rows; ++i) {
        const HighDimCritical& from = crit_at(k, j);
        const HighDimCritical& to = crit_at(k - 1, i);
        const int expected = analytic_line_count(from, to);
        const int shot = shooting_line_count(from, to, cfg, epsilon);
        if (shot != expected) {
          throw ClusterAmbiguity("highdim_morse_complex: shooting disagrees with classification");
        }
        counts(i, j) = expected;
        d(i, j) = static_cast<std::uint8_t>(expected % 2);
      }
    }
    data.complex.differential[static_cast<std::size_t>(k)] = d;
    data.complex.flow_line_counts[static_cast<std::size_t>(k)] = counts;
  }

  data.complex.validate();
  data.homology = homology(data.complex);
  return data;
}

}  // namespace lagtor
