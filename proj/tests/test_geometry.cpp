#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lagtor/geometry.hpp"
#include "lagtor/random.hpp"

using namespace lagtor;

namespace {

Vec v3(double x, double y, double z) {
  Vec v(3);
  v << x, y, z;
  return v;
}

}  // namespace

TEST_CASE("project_to_cotangent normalizes and removes the radial momentum") {
  const CotangentPoint x = project_to_cotangent(v3(0, 0, 2), v3(1, 0, 1));
  CHECK((x.q - v3(0, 0, 1)).norm() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK((x.p - v3(1, 0, 0)).norm() == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("project_to_cotangent is the identity on admissible input") {
  const CotangentPoint x = project_to_cotangent(v3(0, 0, 1), v3(1, 0, 0));
  CHECK(x.q == v3(0, 0, 1));
  CHECK(x.p == v3(1, 0, 0));
}

TEST_CASE("project_to_cotangent rejects the zero vector") {
  CHECK_THROWS_AS(project_to_cotangent(v3(0, 0, 0), v3(1, 0, 0)), ZeroVectorError);
}

TEST_CASE("project_to_cotangent is idempotent") {
  Sampler rng(7);
  for (int i = 0; i < 1000; ++i) {
    const Vec q = rng.gaussian_vec(3) * rng.uniform(0.5, 3.0);
    const Vec p = rng.gaussian_vec(3);
    if (q.norm() < 1e-3) continue;
    const CotangentPoint once = project_to_cotangent(q, p);
    const CotangentPoint twice = project_to_cotangent(once.q, once.p);
    CHECK(ambient_distance(once, twice) <= 1e-14);
  }
}

TEST_CASE("canonical one-form evaluates p.dq") {
  const CotangentPoint x{v3(0, 0, 1), v3(1, 0, 0)};

  SUBCASE("direct dot product") {
    const TangentVector v{v3(1, 0, 0), v3(0, 0, -1)};
    CHECK(canonical_one_form(x, v) == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("vertical vectors see nothing") {
    const TangentVector v{v3(0, 0, 0), v3(0, 1, 0)};
    CHECK(canonical_one_form(x, v) == 0.0);
  }
  SUBCASE("the one-form vanishes on the zero section") {
    const CotangentPoint zero_section{v3(0, 0, 1), v3(0, 0, 0)};
    Sampler rng(3);
    for (int i = 0; i < 100; ++i) {
      const TangentVector v = rng.tangent_at(zero_section);
      CHECK(std::abs(canonical_one_form(zero_section, v)) <= 1e-15);
    }
  }
}

TEST_CASE("symplectic form is the Darboux pairing in ambient coordinates") {
  const CotangentPoint x{v3(0, 0, 1), v3(0, 0, 0)};
  const TangentVector v1{v3(1, 0, 0), v3(0, 0, 0)};
  const TangentVector v2{v3(0, 0, 0), v3(1, 0, 0)};
  CHECK(symplectic_form(x, v1, v2) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(symplectic_form(x, v2, v1) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(symplectic_form(x, v1, v1) == 0.0);
}

TEST_CASE("symplectic form is antisymmetric and bilinear on random samples") {
  Sampler rng(11);
  for (int i = 0; i < 1000; ++i) {
    const CotangentPoint x = rng.cotangent_point(2);
    const TangentVector v1 = rng.tangent_at(x);
    const TangentVector v2 = rng.tangent_at(x);
    const TangentVector v3w = rng.tangent_at(x);
    const double a = rng.uniform(-2.0, 2.0);

    CHECK(std::abs(symplectic_form(x, v1, v2) + symplectic_form(x, v2, v1)) <= 1e-12);

    // Linearity in the first slot.
    TangentVector combo{a * v1.dq + v3w.dq, a * v1.dp + v3w.dp};
    const double lhs = symplectic_form(x, combo, v2);
    const double rhs = a * symplectic_form(x, v1, v2) + symplectic_form(x, v3w, v2);
    CHECK(std::abs(lhs - rhs) <= 1e-10);

    const double lam_lhs = canonical_one_form(x, combo);
    const double lam_rhs = a * canonical_one_form(x, v1) + canonical_one_form(x, v3w);
    CHECK(std::abs(lam_lhs - lam_rhs) <= 1e-10);
  }
}

TEST_CASE("operations reject inputs beyond 10x the constraint tolerance") {
  const CotangentPoint bad{v3(0, 0, 1.01), v3(1, 0, 0)};
  const TangentVector v{v3(1, 0, 0), v3(0, 0, 0)};
  CHECK_THROWS_AS(canonical_one_form(bad, v), ConstraintViolation);
  CHECK_THROWS_AS(symplectic_form(bad, v, v), ConstraintViolation);

  // Within 10x, enforce_constraints re-projects instead of failing.
  const CotangentPoint drifted{v3(0, 0, 1.0 + 5e-12), v3(1, 0, 0)};
  const CotangentPoint fixed = enforce_constraints(drifted);
  CHECK(cotangent_residual(fixed) <= 1e-15);
  CHECK_THROWS_AS(enforce_constraints(bad), ConstraintViolation);
}
