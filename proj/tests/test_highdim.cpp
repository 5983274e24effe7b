#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lagtor/highdim.hpp"
#include "lagtor/random.hpp"

using namespace lagtor;

TEST_CASE("n = 2 reproduces the torus construction bit for bit") {
  const HighDimConfig cfg = HighDimConfig::standard(2);
  const FrameAtNorthPole frame = FrameAtNorthPole::standard(2);
  for (int i = 0; i < 23; ++i) {
    for (int j = 0; j < 23; ++j) {
      const TorusPoint pt{2.0 * M_PI * i / 23.0, 2.0 * M_PI * j / 23.0};
      const CotangentPoint a = torus_embed(pt, frame);
      const CotangentPoint b = highdim_embed(pt.t, frame.fiber_direction(pt.v), cfg);
      CHECK(a.q == b.q);
      CHECK(a.p == b.p);
    }
  }
}

TEST_CASE("time zero returns the fiber point") {
  const HighDimConfig cfg = HighDimConfig::standard(3);
  Sampler rng(77);
  for (int i = 0; i < 100; ++i) {
    Vec v = Vec::Zero(4);
    for (const Vec& e : cfg.frame.fiber) v += rng.gaussian() * e;
    v /= v.norm();
    const CotangentPoint x = highdim_embed(0.0, v, cfg);
    CHECK((x.q - cfg.frame.north).norm() <= 1e-15);
    CHECK((x.p - v).norm() <= 1e-15);
  }
}

TEST_CASE("bad fiber directions are rejected") {
  const HighDimConfig cfg = HighDimConfig::standard(3);
  Vec long_v = 2.0 * cfg.frame.v0();
  CHECK_THROWS_AS(highdim_embed(1.0, long_v, cfg), ConstraintViolation);
  Vec off_fiber = (cfg.frame.v0() + cfg.frame.north).normalized();
  CHECK_THROWS_AS(highdim_embed(1.0, off_fiber, cfg), ConstraintViolation);
}

TEST_CASE("the flowed fiber sphere is Lagrangian for n = 3") {
  const HighDimConfig cfg = HighDimConfig::standard(3);
  CHECK(highdim_lagrangian_residual(cfg, 32768, 99) <= 1e-11);
}

TEST_CASE("hypersphere reflection diagnosis") {
  SUBCASE("n = 3: fixed base dimension 2, the symmetry argument fails") {
    const HypersphereDiagnosis diag =
        hypersphere_reflection_diagnosis(HighDimConfig::standard(3));
    CHECK(diag.fix_base_dimension == 2);
    CHECK(diag.approach_fails);
    CHECK(diag.involution_residual <= 1e-14);
  }
  SUBCASE("n = 2 degenerates to the main construction") {
    const HypersphereDiagnosis diag =
        hypersphere_reflection_diagnosis(HighDimConfig::standard(2));
    CHECK(diag.fix_base_dimension == 1);
    CHECK(!diag.approach_fails);
  }
}

TEST_CASE("reflection about the critical geodesic") {
  for (const int n : {3, 4, 5}) {
    const HighDimConfig cfg = HighDimConfig::standard(n);
    const CriticalGeodesicReflectionReport rep = critical_geodesic_reflection(cfg, 256, 555);
    CHECK(rep.fix_base_dimension == 1);
    CHECK(rep.involution.involution_residual() <= 1e-14);
    CHECK(rep.l_invariance_residual <= 1e-12);
    CHECK(rep.critical_point_displacement <= 1e-12);
  }
}

TEST_CASE("high-dimensional Morse data") {
  SUBCASE("n = 3") {
    const HighDimMorseData data = highdim_morse_complex(HighDimConfig::standard(3), 0.01);
    REQUIRE(data.complex.generators.size() == 4);
    for (int k = 0; k <= 3; ++k) {
      CHECK(data.complex.generators[static_cast<std::size_t>(k)].size() == 1);
    }
    for (int k = 1; k <= 3; ++k) {
      CHECK(data.complex.differential[static_cast<std::size_t>(k)].is_zero());
    }
    CHECK(data.homology.ranks == std::vector<int>{1, 1, 1, 1});
    CHECK(data.homology.euler_characteristic() == 0);

    // The two rigid transitions carry two lines each.
    CHECK(data.complex.flow_line_counts[1](0, 0) == 2);
    CHECK(data.complex.flow_line_counts[3](0, 0) == 2);
    // The middle pair is index-adjacent but not connected.
    CHECK(data.complex.flow_line_counts[2](0, 0) == 0);
  }
  SUBCASE("n = 4") {
    const HighDimMorseData data = highdim_morse_complex(HighDimConfig::standard(4), 0.01);
    CHECK(data.homology.ranks == std::vector<int>{1, 1, 0, 1, 1});
    CHECK(data.homology.euler_characteristic() == 0);
  }
  SUBCASE("n = 5") {
    const HighDimMorseData data = highdim_morse_complex(HighDimConfig::standard(5), 0.01);
    CHECK(data.homology.ranks == std::vector<int>{1, 1, 0, 0, 1, 1});
    CHECK(data.homology.euler_characteristic() == 0);
  }
  SUBCASE("n = 2 is refused") {
    CHECK_THROWS_AS(highdim_morse_complex(HighDimConfig::standard(2), 0.01),
                    DegenerateIndexPattern);
  }
}

TEST_CASE("critical points lie on the geodesic reflection's fixed locus") {
  for (const int n : {3, 4, 5}) {
    const HighDimConfig cfg = HighDimConfig::standard(n);
    const CriticalGeodesicReflectionReport rep = critical_geodesic_reflection(cfg, 64, 777);
    for (const double t : {0.0, M_PI}) {
      for (const double sign : {1.0, -1.0}) {
        const CotangentPoint x = highdim_embed(t, sign * cfg.frame.v0(), cfg);
        CHECK(ambient_distance(rep.involution.apply(x), x) <= 1e-12);
      }
    }
  }
}
