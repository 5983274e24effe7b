#include "lagtor/symmetry.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "lagtor/random.hpp"

namespace lagtor {

ReflectionInvolution ReflectionInvolution::fixing_subspace(const Eigen::MatrixXd& basis) {
  if (basis.cols() < 1 || basis.cols() > basis.rows()) {
    throw Error("ReflectionInvolution: bad fixed-subspace basis shape");
  }
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(basis);
  const Eigen::MatrixXd q =
      qr.householderQ() * Eigen::MatrixXd::Identity(basis.rows(), basis.cols());
  ReflectionInvolution inv;
  // R = 2 P - I with P the orthogonal projector onto the fixed subspace.
  inv.refl_ = 2.0 * q * q.transpose() -
              Eigen::MatrixXd::Identity(basis.rows(), basis.rows());
  inv.fixed_dim_ = static_cast<int>(basis.cols());
  return inv;
}

ReflectionInvolution ReflectionInvolution::great_circle(const FrameAtNorthPole& frame) {
  Eigen::MatrixXd basis(frame.ambient_dim(), 2);
  basis.col(0) = frame.north;
  basis.col(1) = frame.v0();
  return fixing_subspace(basis);
}

CotangentPoint ReflectionInvolution::apply(const CotangentPoint& x) const {
  return CotangentPoint{refl_ * x.q, refl_ * x.p};
}

TangentVector ReflectionInvolution::apply(const TangentVector& v) const {
  return TangentVector{refl_ * v.dq, refl_ * v.dp};
}

double ReflectionInvolution::involution_residual() const {
  const Eigen::MatrixXd sq = refl_ * refl_;
  return (sq - Eigen::MatrixXd::Identity(sq.rows(), sq.cols())).cwiseAbs().maxCoeff();
}

CotangentPoint involution_apply(const ReflectionInvolution& inv, const CotangentPoint& x) {
  return inv.apply(x);
}

double verify_symplectic(const ReflectionInvolution& inv, int samples,
                         std::uint64_t seed, int n) {
  if (samples < 100) throw Error("verify_symplectic: samples must be >= 100");
  Sampler rng(seed);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const CotangentPoint x = rng.cotangent_point(n);
    const TangentVector v1 = rng.tangent_at(x);
    const TangentVector v2 = rng.tangent_at(x);
    const CotangentPoint ix = inv.apply(x);
    const TangentVector iv1 = inv.apply(v1);
    const TangentVector iv2 = inv.apply(v2);

    const double lam = canonical_one_form(x, v1);
    const double lam_i = canonical_one_form(ix, iv1);
    const double om = symplectic_form(x, v1, v2);
    const double om_i = symplectic_form(ix, iv1, iv2);
    worst = std::max(worst, std::abs(lam - lam_i));
    worst = std::max(worst, std::abs(om - om_i));
  }
  return worst;
}

TorusInvarianceReport verify_torus_invariance(const ReflectionInvolution& inv,
                                              int grid_size,
                                              const FrameAtNorthPole& frame) {
  if (grid_size < 8) throw Error("verify_torus_invariance: grid_size must be >= 8");
  TorusInvarianceReport rep;
  const double h = 2.0 * M_PI / grid_size;
  for (int i = 0; i < grid_size; ++i) {
    for (int j = 0; j < grid_size; ++j) {
      const TorusPoint pt{i * h, j * h};
      const CotangentPoint lhs = inv.apply(torus_embed(pt, frame));
      const CotangentPoint rhs = torus_embed(TorusPoint::wrapped(pt.t, -pt.v), frame);
      rep.max_residual = std::max(rep.max_residual, ambient_distance(lhs, rhs));
    }
  }
  for (int i = 0; i < grid_size; ++i) {
    for (const double v : {0.0, M_PI}) {
      const CotangentPoint x = torus_embed(TorusPoint{i * h, v}, frame);
      rep.max_fixed_circle_residual =
          std::max(rep.max_fixed_circle_residual, ambient_distance(inv.apply(x), x));
    }
  }
  return rep;
}

FixedLocusReport fixed_locus_intersection(const ReflectionInvolution& inv,
                                          const FrameAtNorthPole& frame,
                                          int samples) {
  FixedLocusReport rep;
  rep.component_count = 2;
  rep.component_v = {0.0, M_PI};
  const double h = 2.0 * M_PI / samples;
  for (int i = 0; i < samples; ++i) {
    const double t = i * h;
    const CotangentPoint a = torus_embed(TorusPoint{t, 0.0}, frame);
    const CotangentPoint b = torus_embed(TorusPoint{t, M_PI}, frame);
    rep.membership_residual = std::max(
        {rep.membership_residual, ambient_distance(inv.apply(a), a),
         ambient_distance(inv.apply(b), b)});
    // phi(-t, pi) sits over the same base point as phi(t, 0) with opposite
    // momentum: the zero-section symmetry of the two circles.
    const CotangentPoint b_matched = torus_embed(TorusPoint::wrapped(-t, M_PI), frame);
    rep.momentum_opposition_residual = std::max(
        {rep.momentum_opposition_residual, (a.q - b_matched.q).norm(),
         (a.p + b_matched.p).norm()});
  }
  return rep;
}

std::vector<double> induced_action_fixed_circles(int grid_size) {
  // Fixed points of v -> -v on the v-circle; resolved on a grid and then
  // snapped, rather than assumed.
  std::vector<double> fixed;
  const double h = 2.0 * M_PI / grid_size;
  for (int j = 0; j < grid_size; ++j) {
    const double v = j * h;
    if (circle_distance(v, wrap_2pi(-v)) < h / 2.0) {
      bool known = false;
      for (const double f : fixed) {
        if (circle_distance(f, v) < 2.0 * h) known = true;
      }
      if (!known) fixed.push_back(v);
    }
  }
  return fixed;
}

double verify_critical_points_fixed(const ReflectionInvolution& inv,
                                    const MorseFunctionSpec& spec,
                                    const FrameAtNorthPole& frame) {
  double worst = 0.0;
  for (const auto& cp : critical_points(spec)) {
    const CotangentPoint x = torus_embed(cp.coords, frame);
    worst = std::max(worst, ambient_distance(inv.apply(x), x));
  }
  return worst;
}

double verify_f_invariance(const MorseFunctionSpec& spec, int grid_size) {
  spec.validate();
  return torus_function_invariance_residual(
      [&spec](double t, double v) { return morse_value(spec, TorusPoint{t, v}); },
      grid_size);
}

double torus_function_invariance_residual(
    const std::function<double(double, double)>& f, int grid_size) {
  if (grid_size < 8) throw Error("invariance residual: grid_size must be >= 8");
  double worst = 0.0;
  const double h = 2.0 * M_PI / grid_size;
  for (int i = 0; i < grid_size; ++i) {
    for (int j = 0; j < grid_size; ++j) {
      const double t = i * h;
      const double v = j * h;
      worst = std::max(worst, std::abs(f(t, v) - f(t, wrap_2pi(-v))));
    }
  }
  return worst;
}

}  // namespace lagtor
