#include "lagtor/maslov.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>

namespace lagtor {

namespace {

using Vec6 = Eigen::Matrix<double, 6, 1>;
using Frame64 = Eigen::Matrix<double, 6, 4>;

// Disk invariants use the d(lambda) convention for the symplectic form, so
// that Stokes gives area = boundary integral of p.dq directly.
double two_form(const TangentVector& v1, const TangentVector& v2) {
  return v1.dp.dot(v2.dq) - v1.dq.dot(v2.dp);
}

double two_form6(const Vec6& u, const Vec6& v) {
  return u.tail<3>().dot(v.head<3>()) - u.head<3>().dot(v.tail<3>());
}

Vec6 stack6(const Vec& dq, const Vec& dp) {
  Vec6 u;
  u.head<3>() = dq;
  u.tail<3>() = dp;
  return u;
}

// Orthogonal projection onto the tangent space at x. The two constraint
// normals (q, 0) and (p, q) are mutually orthogonal since q.p = 0.
Vec6 project_onto_tangent(const CotangentPoint& x, const Vec6& u) {
  const Vec6 n1 = stack6(x.q, Vec::Zero(3));
  const Vec6 n2 = stack6(x.p, x.q);
  Vec6 v = u - u.dot(n1) * n1;
  v -= (v.dot(n2) / n2.squaredNorm()) * n2;
  return v;
}

// Restores the Darboux relations two_form(a_i, b_j) = delta_ij on columns
// (a1, a2, b1, b2), preserving the spanned subspace. Branchless on purpose:
// transported frames stay near-Darboux, and pivoting would break continuity
// of the frame in the loop parameter.
Frame64 symplectic_gram_schmidt(const Frame64& m) {
  Vec6 a1 = m.col(0);
  Vec6 a2 = m.col(1);
  Vec6 b1 = m.col(2);
  Vec6 b2 = m.col(3);

  const double na1 = a1.norm();
  if (na1 < 1e-12) throw FrameDegeneracy("frame transport: collapsed column");
  a1 /= na1;
  b1 -= b1.dot(a1) * a1;
  const double s1 = two_form6(a1, b1);
  if (std::abs(s1) < 0.1) throw FrameDegeneracy("frame transport: degenerate pairing");
  b1 /= s1;

  auto strip = [&](Vec6& v) { v += two_form6(v, a1) * b1 - two_form6(v, b1) * a1; };
  strip(a2);
  strip(b2);

  const double na2 = a2.norm();
  if (na2 < 1e-12) throw FrameDegeneracy("frame transport: collapsed column");
  a2 /= na2;
  b2 -= b2.dot(a2) * a2;
  const double s2 = two_form6(a2, b2);
  if (std::abs(s2) < 0.1) throw FrameDegeneracy("frame transport: degenerate pairing");
  b2 /= s2;

  Frame64 out;
  out.col(0) = a1;
  out.col(1) = a2;
  out.col(2) = b1;
  out.col(3) = b2;
  return out;
}

Frame64 project_frame(const CotangentPoint& x, const Frame64& f) {
  Frame64 out;
  for (int c = 0; c < 4; ++c) out.col(c) = project_onto_tangent(x, f.col(c));
  return symplectic_gram_schmidt(out);
}

// Darboux frame of the tangent space at x, built from the kernel of the
// linearized constraints. Unlike the transport step, an arbitrary kernel
// basis can pair badly, so partners are chosen by largest pairing first.
Frame64 initial_frame(const CotangentPoint& x) {
  Eigen::MatrixXd constraints(2, 6);
  constraints.row(0) = stack6(x.q, Vec::Zero(3)).transpose();
  constraints.row(1) = stack6(x.p, x.q).transpose();
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(constraints);
  const Eigen::MatrixXd kernel = lu.kernel();
  if (kernel.cols() != 4) throw FrameDegeneracy("initial frame: tangent space is not 4-dimensional");

  std::vector<Vec6> pool;
  for (int c = 0; c < 4; ++c) pool.push_back(kernel.col(c).normalized());

  auto take_pair = [&pool](Vec6& a, Vec6& b) {
    a = pool.front().normalized();
    pool.erase(pool.begin());
    std::size_t best = 0;
    for (std::size_t i = 1; i < pool.size(); ++i) {
      if (std::abs(two_form6(a, pool[i])) > std::abs(two_form6(a, pool[best]))) best = i;
    }
    b = pool[best];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
  };

  Vec6 a1, b1, a2, b2;
  take_pair(a1, b1);
  // Strip the first hyperbolic plane off the remaining candidates.
  for (Vec6& v : pool) {
    const double s = two_form6(a1, b1);
    v += (two_form6(v, a1) * b1 - two_form6(v, b1) * a1) / s;
  }
  take_pair(a2, b2);

  Frame64 f;
  f.col(0) = a1;
  f.col(1) = a2;
  f.col(2) = b1;
  f.col(3) = b2;
  return symplectic_gram_schmidt(f);
}

double frame_condition(const Frame64& f) {
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(f);
  return svd.singularValues()(0) / svd.singularValues()(3);
}

}  // namespace

CotangentPoint DiskClass::at(double rho, double theta) const {
  const int m = static_cast<int>(pieces.size());
  const double clamped = std::clamp(rho, 0.0, 1.0);
  int k = std::min(m - 1, static_cast<int>(clamped * m));
  const double local = clamped * m - k;
  return pieces[static_cast<std::size_t>(k)].map(local, wrap_2pi(theta));
}

DiskClass build_filling(DiskKind kind, const FrameAtNorthPole& frame) {
  frame.validate();
  if (frame.ambient_dim() != 3) {
    throw Error("build_filling: disk classes are defined for T*S^2 only");
  }
  DiskClass d;
  d.kind = kind;

  switch (kind) {
    case DiskKind::FiberDisk: {
      // Flat disk {(N, a w(b))} inside the fiber over the north pole.
      FillingPiece flat;
      flat.map = [frame](double a, double b) {
        return CotangentPoint{frame.north, a * frame.fiber_direction(b)};
      };
      flat.partial_a = [frame](double, double b) {
        return TangentVector{Vec::Zero(frame.ambient_dim()), frame.fiber_direction(b)};
      };
      flat.partial_b = [frame](double a, double b) {
        return TangentVector{Vec::Zero(frame.ambient_dim()),
                             a * frame.fiber_direction_derivative(b)};
      };
      d.pieces.push_back(flat);
      d.boundary = [frame](double theta) {
        return torus_embed(TorusPoint{0.0, theta}, frame);
      };
      d.boundary_planes = [frame](double theta) {
        return embedding_differential(TorusPoint{0.0, theta}, frame);
      };
      break;
    }

    case DiskKind::GeodesicDisk: {
      // Inner piece: hemisphere cap inside the zero section, contracting the
      // base great circle to the point e2. Outer piece: the annulus
      // (a, b) -> (q(b), a p(b)) shrinking the momentum of the geodesic loop.
      const Vec side = frame.fiber[1];
      auto base_q = [frame](double b) {
        return std::cos(b) * frame.north + std::sin(b) * frame.v0();
      };
      auto base_p = [frame](double b) {
        return std::cos(b) * frame.v0() - std::sin(b) * frame.north;
      };

      FillingPiece cap;
      cap.map = [side, base_q, frame](double a, double b) {
        const Vec m = (1.0 - a) * side + a * base_q(b);
        return CotangentPoint{m / m.norm(), Vec::Zero(frame.ambient_dim())};
      };
      cap.partial_a = [side, base_q, frame](double a, double b) {
        const Vec m = (1.0 - a) * side + a * base_q(b);
        const double mn = m.norm();
        const Vec u = m / mn;
        const Vec dm = base_q(b) - side;
        return TangentVector{(dm - u.dot(dm) * u) / mn, Vec::Zero(frame.ambient_dim())};
      };
      cap.partial_b = [side, base_q, base_p, frame](double a, double b) {
        const Vec m = (1.0 - a) * side + a * base_q(b);
        const double mn = m.norm();
        const Vec u = m / mn;
        const Vec dm = a * base_p(b);
        return TangentVector{(dm - u.dot(dm) * u) / mn, Vec::Zero(frame.ambient_dim())};
      };

      FillingPiece annulus;
      annulus.map = [base_q, base_p](double a, double b) {
        return CotangentPoint{base_q(b), a * base_p(b)};
      };
      annulus.partial_a = [base_q, base_p, frame](double, double b) {
        return TangentVector{Vec::Zero(frame.ambient_dim()), base_p(b)};
      };
      annulus.partial_b = [base_q, base_p](double a, double b) {
        return TangentVector{base_p(b), -a * base_q(b)};
      };

      d.pieces.push_back(cap);
      d.pieces.push_back(annulus);
      d.boundary = [frame](double theta) {
        return torus_embed(TorusPoint{theta, 0.0}, frame);
      };
      d.boundary_planes = [frame](double theta) {
        return embedding_differential(TorusPoint{theta, 0.0}, frame);
      };
      break;
    }

    case DiskKind::Constant: {
      const CotangentPoint x0 = torus_embed(TorusPoint{0.0, 0.0}, frame);
      FillingPiece point;
      point.map = [x0](double, double) { return x0; };
      const TangentVector zero{Vec::Zero(frame.ambient_dim()), Vec::Zero(frame.ambient_dim())};
      point.partial_a = [zero](double, double) { return zero; };
      point.partial_b = [zero](double, double) { return zero; };
      d.pieces.push_back(point);
      d.boundary = [x0](double) { return x0; };
      d.boundary_planes = [frame](double) {
        return embedding_differential(TorusPoint{0.0, 0.0}, frame);
      };
      break;
    }
  }
  return d;
}

double boundary_on_torus_residual(const DiskClass& d, const FrameAtNorthPole& frame,
                                  int resolution) {
  double worst = 0.0;
  for (int k = 0; k < resolution; ++k) {
    const double theta = 2.0 * M_PI * k / resolution;
    const CotangentPoint x = d.boundary(theta);
    const FiberIntersection fi = fiber_intersections(SpherePoint{x.q}, frame);
    double best;
    if (fi.is_circle) {
      // On the polar circles p = w(v) cos(t_c), so the parameter angle is the
      // direction of p * cos(t_c).
      const double c = std::cos(fi.circle_t);
      const double v = std::atan2(c * x.p.dot(frame.fiber[1]), c * x.p.dot(frame.fiber[0]));
      best = ambient_distance(torus_embed(TorusPoint::wrapped(fi.circle_t, v), frame), x);
    } else {
      best = std::min(ambient_distance(torus_embed(fi.points[0], frame), x),
                      ambient_distance(torus_embed(fi.points[1], frame), x));
    }
    worst = std::max(worst, best);
  }
  return worst;
}

namespace {

void require_closed(const DiskClass& d) {
  if (ambient_distance(d.boundary(0.0), d.boundary(2.0 * M_PI)) > 1e-10) {
    throw NonClosedBoundary("disk boundary loop does not close");
  }
}

double edge_integral(const FillingPiece& piece, double a, int resolution) {
  // Rectangle rule; exact-order accuracy on smooth periodic integrands.
  double sum = 0.0;
  for (int k = 0; k < resolution; ++k) {
    const double b = 2.0 * M_PI * k / resolution;
    const CotangentPoint x = piece.map(a, b);
    const TangentVector tb = piece.partial_b(a, b);
    sum += x.p.dot(tb.dq);
  }
  return sum * (2.0 * M_PI / resolution);
}

}  // namespace

double symplectic_area(const DiskClass& d, int resolution) {
  if (resolution < 64) throw Error("symplectic_area: resolution must be >= 64");
  require_closed(d);
  double area = 0.0;
  for (const auto& piece : d.pieces) {
    // Oriented boundary of one sheet: the two b-periodic edges; the seams
    // between stacked sheets cancel pairwise.
    area += edge_integral(piece, 1.0, resolution) - edge_integral(piece, 0.0, resolution);
  }
  return area;
}

double symplectic_area_direct(const DiskClass& d, int resolution) {
  if (resolution < 64) throw Error("symplectic_area_direct: resolution must be >= 64");
  require_closed(d);
  const int na = std::max(64, resolution / 4);
  double area = 0.0;
  for (const auto& piece : d.pieces) {
    double sheet = 0.0;
    for (int i = 0; i <= na; ++i) {
      const double a = static_cast<double>(i) / na;
      const double wa = (i == 0 || i == na) ? 0.5 : 1.0;  // trapezoid in a
      for (int k = 0; k < resolution; ++k) {
        const double b = 2.0 * M_PI * k / resolution;
        sheet += wa * two_form(piece.partial_a(a, b), piece.partial_b(a, b));
      }
    }
    area += sheet * (1.0 / na) * (2.0 * M_PI / resolution);
  }
  return area;
}

void LagrangianPlaneLoop::validate() const {
  if (samples.size() < 4) throw ResolutionTooLow("plane loop: too few samples");
  std::vector<Eigen::Matrix<double, 4, 2>> ortho;
  ortho.reserve(samples.size());
  for (const auto& basis : samples) {
    const Eigen::JacobiSVD<Eigen::Matrix<double, 4, 2>> svd(basis, Eigen::ComputeFullU);
    if (svd.singularValues()(1) < 1e-6) {
      throw FrameDegeneracy("plane loop: rank-deficient basis");
    }
    // Omega_std(u, v) = u_x . v_y - u_y . v_x in coordinates (x1, x2, y1, y2).
    const Eigen::Vector2d c1x = basis.col(0).head<2>(), c1y = basis.col(0).tail<2>();
    const Eigen::Vector2d c2x = basis.col(1).head<2>(), c2y = basis.col(1).tail<2>();
    const double om = c1x.dot(c2y) - c1y.dot(c2x);
    const double scale = basis.col(0).norm() * basis.col(1).norm();
    if (std::abs(om) > 1e-9 * std::max(1.0, scale)) {
      throw Error("plane loop: sample is not Lagrangian");
    }
    ortho.push_back(svd.matrixU().leftCols<2>());
  }
  for (std::size_t k = 0; k < ortho.size(); ++k) {
    const auto& cur = ortho[k];
    const auto& nxt = ortho[(k + 1) % ortho.size()];
    const Eigen::JacobiSVD<Eigen::Matrix2d> svd(cur.transpose() * nxt);
    const double cos_angle = std::clamp(svd.singularValues()(1), -1.0, 1.0);
    if (std::acos(cos_angle) > M_PI / 8.0) {
      throw ResolutionTooLow("plane loop: consecutive samples too far apart");
    }
  }
}

LagrangianPlaneLoop boundary_plane_loop(const DiskClass& d, int resolution,
                                        const TrivializationOptions& opts) {
  if (resolution < 64) throw Error("boundary_plane_loop: resolution must be >= 64");
  require_closed(d);

  const double bx = opts.base_rho * std::cos(opts.base_theta);
  const double by = opts.base_rho * std::sin(opts.base_theta);
  const Frame64 frame0 = initial_frame(d.at(opts.base_rho, opts.base_theta));

  LagrangianPlaneLoop loop;
  loop.resolution = resolution;
  loop.samples.reserve(static_cast<std::size_t>(resolution));

  for (int k = 0; k < resolution; ++k) {
    const double theta = 2.0 * M_PI * k / resolution;
    const double ex = std::cos(theta);
    const double ey = std::sin(theta);

    Frame64 f = frame0;
    for (int j = 1; j <= opts.transport_steps; ++j) {
      const double tau = static_cast<double>(j) / opts.transport_steps;
      const double cx = (1.0 - tau) * bx + tau * ex;
      const double cy = (1.0 - tau) * by + tau * ey;
      const double rho = std::min(1.0, std::hypot(cx, cy));
      const double phi = std::atan2(cy, cx);
      f = project_frame(d.at(rho, phi), f);
    }
    if (frame_condition(f) > 1e6) {
      throw FrameDegeneracy("boundary_plane_loop: transported frame ill-conditioned");
    }

    const auto [v1, v2] = d.boundary_planes(theta);
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr{Eigen::MatrixXd(f)};
    Eigen::Matrix<double, 4, 2> coords;
    coords.col(0) = qr.solve(stack6(v1.dq, v1.dp));
    coords.col(1) = qr.solve(stack6(v2.dq, v2.dp));
    loop.samples.push_back(coords);
  }
  return loop;
}

int maslov_index(const LagrangianPlaneLoop& loop) {
  loop.validate();

  std::vector<std::complex<double>> det2;
  det2.reserve(loop.samples.size());
  for (const auto& basis : loop.samples) {
    // Orthonormalize, then read the two columns as complex vectors
    // z_j = x_j + i y_j; for a Lagrangian plane this matrix is unitary.
    const Eigen::HouseholderQR<Eigen::Matrix<double, 4, 2>> qr(basis);
    const Eigen::Matrix<double, 4, 2> q =
        qr.householderQ() * Eigen::Matrix<double, 4, 2>::Identity();
    Eigen::Matrix2cd u;
    for (int c = 0; c < 2; ++c) {
      u(0, c) = std::complex<double>(q(0, c), q(2, c));
      u(1, c) = std::complex<double>(q(1, c), q(3, c));
    }
    const std::complex<double> det = u.determinant();
    if (std::abs(std::abs(det) - 1.0) > 1e-6) {
      throw FrameDegeneracy("maslov_index: unitarization failed");
    }
    det2.push_back(det * det);
  }

  double total = 0.0;
  const std::size_t count = det2.size();
  for (std::size_t k = 0; k < count; ++k) {
    const std::complex<double> ratio = det2[(k + 1) % count] / det2[k];
    const double jump = std::arg(ratio);
    if (std::abs(jump) > M_PI / 2.0) {
      throw ResolutionTooLow("maslov_index: phase jump above pi/2");
    }
    total += jump;
  }

  const double winding = total / (2.0 * M_PI);
  const long nearest = std::lround(winding);
  if (std::abs(total - 2.0 * M_PI * nearest) > 0.1) {
    throw NonIntegerWinding("maslov_index: winding not within 0.1 of an integer");
  }
  return static_cast<int>(nearest);
}

int disk_maslov_index(const DiskClass& d, int resolution,
                      const TrivializationOptions& opts) {
  int res = std::max(64, resolution);
  while (true) {
    try {
      return maslov_index(boundary_plane_loop(d, res, opts));
    } catch (const ResolutionTooLow&) {
      if (res >= (1 << 16)) throw;
    } catch (const NonIntegerWinding&) {
      if (res >= (1 << 16)) throw;
    }
    res *= 2;
  }
}

MonotonicityReport monotonicity_check(const FrameAtNorthPole& frame, int resolution) {
  const DiskClass fiber = build_filling(DiskKind::FiberDisk, frame);
  const DiskClass geo = build_filling(DiskKind::GeodesicDisk, frame);

  MonotonicityReport rep;
  rep.fiber_area = symplectic_area(fiber, resolution);
  rep.fiber_index = disk_maslov_index(fiber, resolution);
  if (rep.fiber_index == 0 && std::abs(rep.fiber_area) > 1e-9) {
    throw MonotonicityViolation("fiber disk: zero index with nonzero area");
  }

  const double geo_area = symplectic_area(geo, resolution);
  const int geo_index = disk_maslov_index(geo, resolution);
  if (geo_index == 0) {
    throw MonotonicityViolation("geodesic disk: index unexpectedly zero");
  }
  rep.constant = geo_area / geo_index;

  int minimal = 0;
  for (const int idx : {rep.fiber_index, geo_index}) {
    if (idx > 0 && (minimal == 0 || idx < minimal)) minimal = idx;
  }
  rep.minimal_maslov = minimal;
  return rep;
}

int expected_dimension(int i_minus, int i_plus, int n) {
  return i_minus - i_plus + n;
}

}  // namespace lagtor
