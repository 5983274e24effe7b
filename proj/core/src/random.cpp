#include "lagtor/random.hpp"

#include <cmath>

namespace lagtor {

double Sampler::uniform() {
  // 53 high bits of the raw stream -> dyadic rational in [0, 1).
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Sampler::uniform(double a, double b) { return a + (b - a) * uniform(); }

double Sampler::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * M_PI * u2;
  spare_ = r * std::sin(phi);
  have_spare_ = true;
  return r * std::cos(phi);
}

Vec Sampler::gaussian_vec(int dim) {
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = gaussian();
  return v;
}

Vec Sampler::unit_vec(int dim) {
  Vec v = gaussian_vec(dim);
  double n = v.norm();
  while (n < 1e-8) {
    v = gaussian_vec(dim);
    n = v.norm();
  }
  return v / n;
}

CotangentPoint Sampler::cotangent_point(int n, double pmin, double pmax) {
  const int dim = n + 1;
  const Vec q = unit_vec(dim);
  Vec p = gaussian_vec(dim);
  p -= q.dot(p) * q;
  double pn = p.norm();
  while (pn < 1e-8) {
    p = gaussian_vec(dim);
    p -= q.dot(p) * q;
    pn = p.norm();
  }
  p *= uniform(pmin, pmax) / pn;
  return CotangentPoint{q, p};
}

TangentVector Sampler::tangent_at(const CotangentPoint& x) {
  const int dim = static_cast<int>(x.q.size());
  return project_to_tangent(x, gaussian_vec(dim), gaussian_vec(dim));
}

}  // namespace lagtor
