#pragma once

#include <cstdint>
#include <random>

#include "lagtor/geometry.hpp"

namespace lagtor {

/// Seeded sample source. Distributions are hand-rolled on top of the raw
/// mt19937_64 stream so that identical seeds give identical samples on every
/// platform and standard library.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1).
  double uniform();
  double uniform(double a, double b);

  /// Standard normal via Box-Muller.
  double gaussian();

  Vec gaussian_vec(int dim);
  Vec unit_vec(int dim);

  /// Admissible point of T*S^n with |p| in [pmin, pmax].
  CotangentPoint cotangent_point(int n, double pmin = 0.2, double pmax = 2.0);

  /// Admissible tangent vector at x with O(1) components.
  TangentVector tangent_at(const CotangentPoint& x);

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace lagtor
