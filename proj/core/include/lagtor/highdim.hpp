#pragma once

#include <cstdint>
#include <vector>

#include "lagtor/geometry.hpp"
#include "lagtor/morse.hpp"
#include "lagtor/symmetry.hpp"
#include "lagtor/torus.hpp"

namespace lagtor {

/// Configuration for L = S^1 x S^{n-1} inside T*S^n.
struct HighDimConfig {
  int n = 3;
  FrameAtNorthPole frame;

  static HighDimConfig standard(int n);
  void validate() const;
};

/// phi_t((N, v)) for a unit fiber direction v; specializes to the torus
/// embedding when n = 2 and v = cos(angle) e1 + sin(angle) e2.
CotangentPoint highdim_embed(double t, const Vec& v, const HighDimConfig& cfg);

/// Tangent basis of L at (t, v): the flow direction followed by the
/// push-forwards of an orthonormal tangent basis of the fiber sphere.
std::vector<TangentVector> highdim_embedding_basis(double t, const Vec& v,
                                                   const HighDimConfig& cfg);

/// Max |omega| over all tangent pairs at roughly `samples` points
/// (t-grid times seeded fiber-sphere samples).
double highdim_lagrangian_residual(const HighDimConfig& cfg, long samples,
                                   std::uint64_t seed);

struct HypersphereDiagnosis {
  int fix_base_dimension = 0;      // n - 1
  bool approach_fails = false;     // fixed base dimension exceeds 1
  double involution_residual = 0.0;
};

/// Reflection across a hyperplane through N: a symplectic involution whose
/// fixed locus is too large for the symmetry argument as soon as n >= 3.
HypersphereDiagnosis hypersphere_reflection_diagnosis(const HighDimConfig& cfg);

struct CriticalGeodesicReflectionReport {
  ReflectionInvolution involution;
  int fix_base_dimension = 0;                 // 1
  double l_invariance_residual = 0.0;         // I(phi_t(N, v)) vs phi_t(N, Rv)
  double critical_point_displacement = 0.0;   // the four critical points
};

/// The reflection about the geodesic circle through the antipodal critical
/// directions +-v0: fixes span{N, v0}, negates the rest.
CriticalGeodesicReflectionReport critical_geodesic_reflection(const HighDimConfig& cfg, int samples,
                                              std::uint64_t seed);

struct HighDimMorseData {
  MorseComplex complex;
  HomologyResult homology;
};

/// Morse data of the sum of height functions on S^1 x S^{n-1}: four critical
/// points with indices {0, 1, n-1, n}, zero differential, one rank in each
/// of those degrees. Throws DegenerateIndexPattern for n = 2.
HighDimMorseData highdim_morse_complex(const HighDimConfig& cfg, double epsilon);

}  // namespace lagtor
