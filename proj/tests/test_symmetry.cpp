#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lagtor/random.hpp"
#include "lagtor/symmetry.hpp"

using namespace lagtor;

namespace {

Vec v3(double x, double y, double z) {
  Vec v(3);
  v << x, y, z;
  return v;
}

const FrameAtNorthPole kFrame = FrameAtNorthPole::standard(2);
const ReflectionInvolution kInv = ReflectionInvolution::great_circle(kFrame);
const MorseFunctionSpec kSpec{0.01};

}  // namespace

TEST_CASE("the reflection is an exact involution") {
  CHECK(kInv.involution_residual() <= 1e-14);
  CHECK(kInv.fixed_base_dimension() == 1);

  Sampler rng(9);
  for (int i = 0; i < 10000; ++i) {
    const CotangentPoint x = rng.cotangent_point(2);
    CHECK(ambient_distance(kInv.apply(kInv.apply(x)), x) <= 1e-14);
    // An orthogonal map preserves the momentum length exactly.
    CHECK(std::abs(kInv.apply(x).p.norm() - x.p.norm()) <= 1e-15);
  }
}

TEST_CASE("points of the fixed plane stay put") {
  const CotangentPoint on_plane{v3(0, 0, 1), v3(1, 0, 0)};
  CHECK(ambient_distance(involution_apply(kInv, on_plane), on_plane) == 0.0);

  const CotangentPoint tilted = project_to_cotangent(v3(0.6, 0, 0.8), v3(-0.8, 0, 0.6));
  CHECK(ambient_distance(involution_apply(kInv, tilted), tilted) == 0.0);
}

TEST_CASE("the lift preserves the one-form and the symplectic form") {
  CHECK(verify_symplectic(kInv, 10000, 1234) <= 1e-12);

  // At a fixed-plane point the residual is exactly zero.
  const CotangentPoint x{v3(0, 0, 1), v3(1, 0, 0)};
  const TangentVector v{v3(1, 0, 0), v3(0, 0, -1)};
  CHECK(canonical_one_form(kInv.apply(x), kInv.apply(v)) == canonical_one_form(x, v));

  Sampler rng(10);
  for (int i = 0; i < 100; ++i) {
    const CotangentPoint y = rng.cotangent_point(2);
    const TangentVector a = rng.tangent_at(y);
    const TangentVector b = rng.tangent_at(y);
    const double direct = symplectic_form(kInv.apply(y), kInv.apply(a), kInv.apply(b));
    const double swapped = symplectic_form(kInv.apply(y), kInv.apply(b), kInv.apply(a));
    CHECK(direct == -swapped);
  }
}

TEST_CASE("the involution acts on the torus by (t, v) -> (t, -v)") {
  const TorusInvarianceReport rep = verify_torus_invariance(kInv, 64, kFrame);
  CHECK(rep.max_residual <= 1e-12);
  CHECK(rep.max_fixed_circle_residual <= 1e-12);
}

TEST_CASE("L meets the fixed locus in two circles, opposite momenta") {
  const FixedLocusReport rep = fixed_locus_intersection(kInv, kFrame);
  CHECK(rep.component_count == 2);
  CHECK(rep.component_v[0] == 0.0);
  CHECK(rep.component_v[1] == doctest::Approx(M_PI));
  CHECK(rep.membership_residual <= 1e-12);
  CHECK(rep.momentum_opposition_residual <= 1e-12);

  // The parameter-level fixed circles of v -> -v are exactly those two.
  const std::vector<double> circles = induced_action_fixed_circles(256);
  REQUIRE(circles.size() == 2);
  CHECK(circle_distance(circles[0], 0.0) <= 1e-12);
  CHECK(circle_distance(circles[1], M_PI) <= 1e-12);
}

TEST_CASE("all four critical points are fixed and sit on the fixed locus") {
  CHECK(verify_critical_points_fixed(kInv, kSpec, kFrame) <= 1e-12);

  for (const auto& cp : critical_points(kSpec)) {
    const CotangentPoint x = torus_embed(cp.coords, kFrame);
    CHECK(ambient_distance(kInv.apply(x), x) <= 1e-12);
  }
}

TEST_CASE("f is invariant; an odd perturbation is caught") {
  CHECK(verify_f_invariance(kSpec, 64) <= 1e-15);

  // Negative control: a sin(v) term breaks the symmetry and must show up.
  const double eps = kSpec.epsilon;
  const double bad = torus_function_invariance_residual(
      [eps](double t, double v) { return eps * (std::cos(t) + std::sin(v)); }, 64);
  CHECK(bad > 0.1 * eps);

  // The residual of the control scales linearly with the amplitude.
  const double bad_tenth = torus_function_invariance_residual(
      [eps](double t, double v) { return 0.1 * eps * (std::cos(t) + std::sin(v)); }, 64);
  CHECK(bad_tenth == doctest::Approx(0.1 * bad).epsilon(1e-12));
}
