#include "lagtor/torus.hpp"

#include <cmath>
#include <limits>
#include <unordered_map>

namespace lagtor {

double wrap_2pi(double theta) {
  const double two_pi = 2.0 * M_PI;
  double w = std::fmod(theta, two_pi);
  if (w < 0.0) w += two_pi;
  if (w >= two_pi) w = 0.0;  // fmod can land exactly on 2*pi after the add
  return w;
}

double circle_distance(double a, double b) {
  const double d = std::abs(wrap_2pi(a) - wrap_2pi(b));
  return std::min(d, 2.0 * M_PI - d);
}

double torus_distance(const TorusPoint& a, const TorusPoint& b) {
  return std::hypot(circle_distance(a.t, b.t), circle_distance(a.v, b.v));
}

FrameAtNorthPole FrameAtNorthPole::standard(int n) {
  FrameAtNorthPole f;
  f.north = Vec::Zero(n + 1);
  f.north[n] = 1.0;
  f.fiber.reserve(n);
  for (int i = 0; i < n; ++i) {
    Vec e = Vec::Zero(n + 1);
    e[i] = 1.0;
    f.fiber.push_back(std::move(e));
  }
  return f;
}

Vec FrameAtNorthPole::fiber_direction(double v) const {
  return std::cos(v) * fiber[0] + std::sin(v) * fiber[1];
}

Vec FrameAtNorthPole::fiber_direction_derivative(double v) const {
  return -std::sin(v) * fiber[0] + std::cos(v) * fiber[1];
}

void FrameAtNorthPole::validate(double tol) const {
  if (fiber.size() < 2) throw Error("frame needs at least two fiber vectors");
  if (unit_residual(north) > tol) throw ConstraintViolation("frame: |N| != 1");
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    if (std::abs(north.dot(fiber[i])) > tol) {
      throw ConstraintViolation("frame: fiber vector not orthogonal to N");
    }
    for (std::size_t j = 0; j <= i; ++j) {
      const double want = (i == j) ? 1.0 : 0.0;
      if (std::abs(fiber[i].dot(fiber[j]) - want) > tol) {
        throw ConstraintViolation("frame: fiber basis not orthonormal");
      }
    }
  }
}

CotangentPoint geodesic_flow(const CotangentPoint& x, double t, double tol) {
  const CotangentPoint y = enforce_constraints(x, tol);
  const double c = y.p.norm();
  if (c <= tol) {
    throw ZeroMomentum("geodesic_flow: covector length below tolerance");
  }
  const Vec u = y.p / c;
  const double ct = std::cos(c * t);
  const double st = std::sin(c * t);
  CotangentPoint out;
  out.q = ct * y.q + st * u;
  out.p = ct * y.p - (c * st) * y.q;
  return out;
}

CotangentPoint torus_embed(const TorusPoint& pt, const FrameAtNorthPole& frame) {
  return geodesic_flow(CotangentPoint{frame.north, frame.fiber_direction(pt.v)},
                       pt.t);
}

std::pair<TangentVector, TangentVector> embedding_differential(
    const TorusPoint& pt, const FrameAtNorthPole& frame) {
  const Vec w = frame.fiber_direction(pt.v);
  const Vec wp = frame.fiber_direction_derivative(pt.v);
  const double ct = std::cos(pt.t);
  const double st = std::sin(pt.t);
  TangentVector dt;
  dt.dq = ct * w - st * frame.north;
  dt.dp = -st * w - ct * frame.north;
  TangentVector dv;
  dv.dq = st * wp;
  dv.dp = ct * wp;
  return {dt, dv};
}

double verify_lagrangian(int grid_size, const FrameAtNorthPole& frame) {
  if (grid_size < 2) throw Error("verify_lagrangian: grid_size must be >= 2");
  const double h = 2.0 * M_PI / grid_size;
  double worst = 0.0;
  for (int i = 0; i < grid_size; ++i) {
    for (int j = 0; j < grid_size; ++j) {
      const TorusPoint pt{i * h, j * h};
      const auto [dt, dv] = embedding_differential(pt, frame);
      const double w = dt.dq.dot(dv.dp) - dt.dp.dot(dv.dq);
      worst = std::max(worst, std::abs(w));
    }
  }
  return worst;
}

FiberIntersection fiber_intersections(const SpherePoint& q,
                                      const FrameAtNorthPole& frame,
                                      double tol) {
  if (unit_residual(q.q) > 10.0 * tol) {
    throw ConstraintViolation("fiber_intersections: base point not on sphere");
  }
  const Vec qn = q.q / q.q.norm();
  const double c = qn.dot(frame.north);

  FiberIntersection out;
  if (1.0 - std::abs(c) <= tol) {
    out.is_circle = true;
    out.circle_t = (c > 0.0) ? 0.0 : M_PI;
    return out;
  }

  // q = N cos t + w(v) sin t with t in (0, pi) fixes w(v) as the normalized
  // tangential part; the second solution is (-t, v + pi).
  const double t1 = std::acos(c);
  const Vec tang = qn - c * frame.north;
  const Vec w = tang / tang.norm();
  const double v1 = wrap_2pi(std::atan2(w.dot(frame.fiber[1]), w.dot(frame.fiber[0])));
  out.points[0] = TorusPoint::wrapped(t1, v1);
  out.points[1] = TorusPoint::wrapped(2.0 * M_PI - t1, v1 + M_PI);
  return out;
}

std::vector<GeneratorDescriptor> relative_homotopy_generators(
    const FrameAtNorthPole& frame) {
  std::vector<GeneratorDescriptor> gens;
  gens.push_back({GeneratorKind::FiberDisk, "fiber_disk", true,
                  [frame](double v) { return torus_embed(TorusPoint{0.0, v}, frame); }});
  gens.push_back({GeneratorKind::GeodesicDisk, "geodesic_disk", true,
                  [frame](double t) { return torus_embed(TorusPoint{t, 0.0}, frame); }});
  // The ambient sphere class is a descriptor only; the proofs never use its
  // invariants quantitatively.
  gens.push_back({GeneratorKind::SphereClass, "sphere_class", false, {}});
  return gens;
}

double injectivity_margin(int grid_size, const FrameAtNorthPole& frame) {
  const int g = grid_size;
  const double h = 2.0 * M_PI / g;
  const int dim = frame.ambient_dim();

  std::vector<double> pts;  // flattened (q, p) rows
  pts.reserve(static_cast<std::size_t>(g) * g * 2 * dim);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      const CotangentPoint x = torus_embed(TorusPoint{i * h, j * h}, frame);
      for (int k = 0; k < dim; ++k) pts.push_back(x.q[k]);
      for (int k = 0; k < dim; ++k) pts.push_back(x.p[k]);
    }
  }

  // Spatial hash over the first three ambient coordinates; image points are
  // spread out at scale h, so cells of size 2h keep buckets small.
  const double cell = 2.0 * h;
  const int row = 2 * dim;
  auto key_of = [&](std::size_t idx) {
    const double* r = &pts[idx * row];
    const long kx = static_cast<long>(std::floor(r[0] / cell));
    const long ky = static_cast<long>(std::floor(r[1] / cell));
    const long kz = static_cast<long>(std::floor(r[2] / cell));
    return (kx * 73856093L) ^ (ky * 19349663L) ^ (kz * 83492791L);
  };
  std::unordered_map<long, std::vector<int>> buckets;
  const int npts = g * g;
  for (int idx = 0; idx < npts; ++idx) buckets[key_of(idx)].push_back(idx);

  auto are_grid_neighbors = [&](int a, int b) {
    const int ai = a / g, aj = a % g, bi = b / g, bj = b % g;
    const int di = std::abs(ai - bi), dj = std::abs(aj - bj);
    const int wdi = std::min(di, g - di), wdj = std::min(dj, g - dj);
    return wdi <= 1 && wdj <= 1;
  };

  double best = std::numeric_limits<double>::infinity();
  for (int idx = 0; idx < npts; ++idx) {
    const double* a = &pts[static_cast<std::size_t>(idx) * row];
    const long kx = static_cast<long>(std::floor(a[0] / cell));
    const long ky = static_cast<long>(std::floor(a[1] / cell));
    const long kz = static_cast<long>(std::floor(a[2] / cell));
    for (long ox = -1; ox <= 1; ++ox) {
      for (long oy = -1; oy <= 1; ++oy) {
        for (long oz = -1; oz <= 1; ++oz) {
          const long key = ((kx + ox) * 73856093L) ^ ((ky + oy) * 19349663L) ^
                           ((kz + oz) * 83492791L);
          const auto it = buckets.find(key);
          if (it == buckets.end()) continue;
          for (int other : it->second) {
            if (other <= idx || are_grid_neighbors(idx, other)) continue;
            const double* b = &pts[static_cast<std::size_t>(other) * row];
            double d2 = 0.0;
            for (int k = 0; k < row; ++k) {
              const double dk = a[k] - b[k];
              d2 += dk * dk;
            }
            best = std::min(best, d2);
          }
        }
      }
    }
  }
  // No non-neighbor pair inside any bucket neighborhood means every
  // non-neighbor pair is at least a cell apart.
  if (!std::isfinite(best)) return cell / h;
  return std::sqrt(best) / h;
}

}  // namespace lagtor
