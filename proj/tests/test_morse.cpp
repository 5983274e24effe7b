#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "lagtor/morse.hpp"

using namespace lagtor;

namespace {

const MorseFunctionSpec kSpec{0.01};

// Test-local closed form of theta' = eps sin(theta), kept independent of the
// library implementation it checks.
double oracle_circle_flow(double theta0, double eps, double s) {
  const double th = wrap_2pi(theta0);
  if (th == 0.0 || th == M_PI) return th;
  return wrap_2pi(2.0 * std::atan(std::tan(th / 2.0) * std::exp(eps * s)));
}

const CriticalPoint* find_cp(const std::vector<CriticalPoint>& cps, double t, double v) {
  for (const auto& cp : cps) {
    if (torus_distance(cp.coords, TorusPoint{t, v}) < 1e-9) return &cp;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("critical points of the height-sum function") {
  const auto cps = critical_points(kSpec);
  REQUIRE(cps.size() == 4);

  std::vector<int> indices;
  for (const auto& cp : cps) indices.push_back(cp.index);
  CHECK(indices == std::vector<int>{2, 1, 1, 0});

  const CriticalPoint* top = find_cp(cps, 0.0, 0.0);
  REQUIRE(top != nullptr);
  CHECK(top->index == 2);
  CHECK(top->value == doctest::Approx(2.0 * kSpec.epsilon));

  const CriticalPoint* bottom = find_cp(cps, M_PI, M_PI);
  REQUIRE(bottom != nullptr);
  CHECK(bottom->index == 0);
  CHECK(bottom->value == doctest::Approx(-2.0 * kSpec.epsilon));

  CHECK(find_cp(cps, 0.0, M_PI)->index == 1);
  CHECK(find_cp(cps, M_PI, 0.0)->index == 1);
  CHECK(find_cp(cps, 0.0, M_PI)->value == doctest::Approx(0.0));

  for (const auto& cp : cps) {
    CHECK(morse_gradient(kSpec, cp.coords).norm() <= 1e-12);
  }
}

TEST_CASE("trajectories stay put at critical points") {
  for (const auto& cp : critical_points(kSpec)) {
    const auto traj = negative_gradient_trajectory(cp.coords, kSpec, 10.0 / kSpec.epsilon, 50.0);
    for (const auto& pt : traj) {
      CHECK(torus_distance(pt, cp.coords) <= 1e-12);
    }
  }
}

TEST_CASE("trajectories converge to the sinks predicted by the closed form") {
  const TorusPoint start{M_PI / 2.0, M_PI};

  SUBCASE("forward time runs to (pi, pi)") {
    const auto traj = negative_gradient_trajectory(start, kSpec, 40.0 / kSpec.epsilon, 100.0);
    CHECK(torus_distance(traj.back(), TorusPoint{M_PI, M_PI}) <= 1e-6);
  }
  SUBCASE("reversed time runs back to (0, pi)") {
    const auto traj = negative_gradient_trajectory(start, kSpec, -40.0 / kSpec.epsilon, 100.0);
    CHECK(torus_distance(traj.back(), TorusPoint{0.0, M_PI}) <= 1e-6);
  }
}

TEST_CASE("RK4 matches the closed form pointwise") {
  const TorusPoint start{M_PI / 2.0, 5.0};
  const double duration = 10.0 / kSpec.epsilon;
  const double step = duration / 500.0;
  const auto traj = negative_gradient_trajectory(start, kSpec, duration, step);
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const double s = step * static_cast<double>(k);
    CHECK(circle_distance(traj[k].t, oracle_circle_flow(start.t, kSpec.epsilon, s)) <= 1e-8);
    CHECK(circle_distance(traj[k].v, oracle_circle_flow(start.v, kSpec.epsilon, s)) <= 1e-8);
  }
}

TEST_CASE("trajectories decrease f monotonically") {
  const TorusPoint start{1.3, 4.2};
  const auto traj = negative_gradient_trajectory(start, kSpec, 30.0 / kSpec.epsilon, 25.0);
  for (std::size_t k = 0; k + 1 < traj.size(); ++k) {
    CHECK(morse_value(kSpec, traj[k + 1]) <= morse_value(kSpec, traj[k]) + 1e-12);
  }
}

TEST_CASE("flow line counts for adjacent critical pairs") {
  const auto cps = critical_points(kSpec);
  const CriticalPoint& top = *find_cp(cps, 0.0, 0.0);
  const CriticalPoint& saddle_v = *find_cp(cps, 0.0, M_PI);
  const CriticalPoint& saddle_t = *find_cp(cps, M_PI, 0.0);
  const CriticalPoint& bottom = *find_cp(cps, M_PI, M_PI);

  for (const auto& [from, to] : {std::pair{&top, &saddle_v}, {&top, &saddle_t},
                                 {&saddle_v, &bottom}, {&saddle_t, &bottom}}) {
    const FlowLineCount fc = count_flow_lines(*from, *to, kSpec);
    CHECK(fc.count == 2);
    CHECK(fc.count_mod2 == 0);
  }

  CHECK_THROWS_AS(count_flow_lines(top, bottom, kSpec), IndexGap);
  CHECK_THROWS_AS(count_flow_lines(saddle_v, saddle_t, kSpec), IndexGap);
}

TEST_CASE("the Morse differential vanishes mod 2") {
  const MorseComplex c = morse_differential(kSpec);

  REQUIRE(c.generators.size() == 3);
  CHECK(c.generators[0].size() == 1);
  CHECK(c.generators[1].size() == 2);
  CHECK(c.generators[2].size() == 1);

  CHECK(c.differential[1].is_zero());
  CHECK(c.differential[2].is_zero());
  CHECK((c.differential[1] * c.differential[2]).is_zero());

  for (int k = 1; k <= 2; ++k) {
    const auto& counts = c.flow_line_counts[static_cast<std::size_t>(k)];
    for (int i = 0; i < counts.rows(); ++i) {
      for (int j = 0; j < counts.cols(); ++j) CHECK(counts(i, j) == 2);
    }
  }
}

TEST_CASE("homology of the torus complex and of synthetic complexes") {
  SUBCASE("torus ranks are the Z/2 Betti numbers") {
    const HomologyResult h = homology(morse_differential(kSpec));
    CHECK(h.ranks == std::vector<int>{1, 2, 1});
    CHECK(h.euler_characteristic() == 0);
  }

  SUBCASE("one generator, zero differential") {
    MorseComplex c;
    c.generators.assign(1, {CriticalPoint{}});
    c.differential.assign(1, Gf2Matrix());
    c.flow_line_counts.assign(1, Eigen::MatrixXi());
    CHECK(homology(c).ranks == std::vector<int>{1});
  }

  SUBCASE("acyclic two-generator complex") {
    MorseComplex c;
    c.generators.assign(2, {CriticalPoint{}});
    c.differential.assign(2, Gf2Matrix());
    c.flow_line_counts.assign(2, Eigen::MatrixXi());
    Gf2Matrix d(1, 1);
    d(0, 0) = 1;
    c.differential[1] = d;
    CHECK(homology(c).ranks == std::vector<int>{0, 0});
  }

  SUBCASE("differentials that do not square to zero are rejected") {
    MorseComplex c;
    c.generators.assign(3, {CriticalPoint{}});
    Gf2Matrix d(1, 1);
    d(0, 0) = 1;
    c.differential.assign(3, d);
    c.flow_line_counts.assign(3, Eigen::MatrixXi());
    CHECK_THROWS_AS(homology(c), NotAComplex);
  }
}

TEST_CASE("the flat metric is Morse-Smale with a healthy margin") {
  const MorseSmaleReport rep = verify_morse_smale(kSpec, 400);
  CHECK(rep.morse_smale);
  CHECK(rep.min_margin > 0.1);
  CHECK_THROWS_AS(verify_morse_smale(kSpec, 10), Error);
}

TEST_CASE("Morse data does not depend on epsilon") {
  for (const double eps : {0.005, 0.01, 0.05}) {
    const MorseFunctionSpec spec{eps};
    const MorseComplex c = morse_differential(spec);
    CHECK(c.differential[1].is_zero());
    CHECK(c.differential[2].is_zero());
    CHECK(homology(c).ranks == std::vector<int>{1, 2, 1});
    for (int k = 1; k <= 2; ++k) {
      const auto& counts = c.flow_line_counts[static_cast<std::size_t>(k)];
      for (int i = 0; i < counts.rows(); ++i) {
        for (int j = 0; j < counts.cols(); ++j) CHECK(counts(i, j) == 2);
      }
    }
  }
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(MorseFunctionSpec{-1.0}.validate(), Error);
  CHECK_THROWS_AS(negative_gradient_trajectory(TorusPoint{1, 1}, kSpec, 10.0, -1.0), Error);
}
