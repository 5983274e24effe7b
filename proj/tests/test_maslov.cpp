#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "lagtor/maslov.hpp"
#include "lagtor/random.hpp"
#include "lagtor/torus.hpp"

using namespace lagtor;

namespace {

const FrameAtNorthPole kFrame = FrameAtNorthPole::standard(2);

using Cplx = std::complex<double>;

Eigen::Matrix<double, 4, 2> plane_from_unitary(const Eigen::Matrix2cd& u) {
  Eigen::Matrix<double, 4, 2> basis;
  for (int c = 0; c < 2; ++c) {
    basis(0, c) = u(0, c).real();
    basis(1, c) = u(1, c).real();
    basis(2, c) = u(0, c).imag();
    basis(3, c) = u(1, c).imag();
  }
  return basis;
}

Eigen::Matrix2cd random_unitary(Sampler& rng) {
  // QR of a random complex matrix.
  Eigen::Matrix2cd m;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) m(i, j) = Cplx(rng.gaussian(), rng.gaussian());
  }
  const Eigen::HouseholderQR<Eigen::Matrix2cd> qr(m);
  return qr.householderQ() * Eigen::Matrix2cd::Identity();
}

// Loop of Lagrangian planes V diag(e^{i m1 theta / 2}, e^{i m2 theta / 2}) R^2,
// closed because half-turn phases are real-orthogonal; its winding is m1 + m2.
LagrangianPlaneLoop synthetic_loop(const Eigen::Matrix2cd& v, int m1, int m2,
                                   int resolution, double start = 0.0,
                                   double warp = 0.0) {
  LagrangianPlaneLoop loop;
  loop.resolution = resolution;
  for (int k = 0; k < resolution; ++k) {
    double theta = start + 2.0 * M_PI * k / resolution;
    theta += warp * std::sin(theta - start);  // monotone reparametrization
    Eigen::Matrix2cd diag = Eigen::Matrix2cd::Zero();
    diag(0, 0) = std::exp(Cplx(0.0, 0.5 * m1 * (theta - start)));
    diag(1, 1) = std::exp(Cplx(0.0, 0.5 * m2 * (theta - start)));
    loop.samples.push_back(plane_from_unitary(v * diag));
  }
  return loop;
}

}  // namespace

TEST_CASE("maslov index of synthetic loops equals the constructed winding") {
  Sampler rng(42);
  for (const auto [m1, m2] : {std::pair{0, 0}, {1, 0}, {1, 1}, {2, 0}, {-1, 0},
                              {3, -1}, {-2, -2}, {5, 2}}) {
    const Eigen::Matrix2cd v = random_unitary(rng);
    const int res = 64 * (1 + std::abs(m1) + std::abs(m2));
    CHECK(maslov_index(synthetic_loop(v, m1, m2, res)) == m1 + m2);
  }
}

TEST_CASE("maslov index is invariant under resolution doubling and reparametrization") {
  Sampler rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Matrix2cd v = random_unitary(rng);
    const int m1 = static_cast<int>(rng.uniform(-3.0, 4.0));
    const int m2 = static_cast<int>(rng.uniform(-3.0, 4.0));
    const int res = 64 * (1 + std::abs(m1) + std::abs(m2));
    const int base = maslov_index(synthetic_loop(v, m1, m2, res));
    CHECK(maslov_index(synthetic_loop(v, m1, m2, 2 * res)) == base);
    CHECK(maslov_index(synthetic_loop(v, m1, m2, res, 0.0, 0.35)) == base);
    CHECK(maslov_index(synthetic_loop(v, m1, m2, res, 1.234)) == base);
  }
}

TEST_CASE("maslov index adds under concatenation") {
  Sampler rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Matrix2cd v = random_unitary(rng);
    const int a1 = static_cast<int>(rng.uniform(-2.0, 3.0));
    const int a2 = static_cast<int>(rng.uniform(-2.0, 3.0));
    const int b1 = 2 * static_cast<int>(rng.uniform(-1.0, 2.0));
    const int b2 = 2 * static_cast<int>(rng.uniform(-1.0, 2.0));
    // Both halves start and end at the plane V R^2 (the second needs whole
    // turns); their concatenation is again a loop.
    const int res = 128 * (1 + std::abs(a1) + std::abs(a2) + std::abs(b1) + std::abs(b2));
    const LagrangianPlaneLoop first = synthetic_loop(v, a1, a2, res);
    const LagrangianPlaneLoop second = synthetic_loop(v, b1, b2, res);
    LagrangianPlaneLoop joined;
    joined.resolution = 2 * res;
    joined.samples = first.samples;
    joined.samples.insert(joined.samples.end(), second.samples.begin(), second.samples.end());
    const int sum = maslov_index(first) + maslov_index(second);
    CHECK(maslov_index(joined) == sum);
  }
}

TEST_CASE("plane loop validation rejects bad input") {
  Sampler rng(45);
  const Eigen::Matrix2cd v = random_unitary(rng);

  SUBCASE("jumpy sampling") {
    LagrangianPlaneLoop sparse = synthetic_loop(v, 6, 6, 8);
    CHECK_THROWS_AS(maslov_index(sparse), ResolutionTooLow);
  }
  SUBCASE("rank-deficient basis") {
    LagrangianPlaneLoop loop = synthetic_loop(v, 0, 0, 64);
    loop.samples[10].col(1) = loop.samples[10].col(0) * (1.0 + 1e-9);
    CHECK_THROWS_AS(maslov_index(loop), FrameDegeneracy);
  }
  SUBCASE("non-Lagrangian plane") {
    LagrangianPlaneLoop loop = synthetic_loop(v, 0, 0, 64);
    Eigen::Matrix<double, 4, 2> bad;
    // span{e_x1, e_y1} pairs to 1 under the standard form.
    bad << 1, 0, 0, 0, 0, 1, 0, 0;
    for (auto& s : loop.samples) s = bad;
    CHECK_THROWS_AS(maslov_index(loop), Error);
  }
}

TEST_CASE("generator disks carry the advertised boundaries") {
  const DiskClass fiber = build_filling(DiskKind::FiberDisk, kFrame);
  const DiskClass geo = build_filling(DiskKind::GeodesicDisk, kFrame);

  for (const double s : {0.0, 1.0, 3.1, 5.9}) {
    CHECK(ambient_distance(fiber.boundary(s), torus_embed(TorusPoint{0.0, s}, kFrame)) <= 1e-15);
    CHECK(ambient_distance(geo.boundary(s), torus_embed(TorusPoint{s, 0.0}, kFrame)) <= 1e-15);
  }
  CHECK(boundary_on_torus_residual(fiber, kFrame, 256) <= 1e-9);
  CHECK(boundary_on_torus_residual(geo, kFrame, 256) <= 1e-9);

  // Filling seams: the cap meets the annulus along the zero-section circle.
  const CotangentPoint seam_lo = geo.pieces[0].map(1.0, 0.8);
  const CotangentPoint seam_hi = geo.pieces[1].map(0.0, 0.8);
  CHECK(ambient_distance(seam_lo, seam_hi) <= 1e-15);
}

TEST_CASE("symplectic areas of the generator disks") {
  const DiskClass fiber = build_filling(DiskKind::FiberDisk, kFrame);
  const DiskClass geo = build_filling(DiskKind::GeodesicDisk, kFrame);
  const DiskClass constant = build_filling(DiskKind::Constant, kFrame);

  // Independent oracle for the geodesic disk: high-resolution quadrature of
  // p . dq along the unit-speed boundary loop, no filling machinery.
  double oracle = 0.0;
  const int n = 100000;
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * M_PI * k / n;
    const CotangentPoint x = torus_embed(TorusPoint{t, 0.0}, kFrame);
    const auto [dt, dv] = embedding_differential(TorusPoint{t, 0.0}, kFrame);
    oracle += x.p.dot(dt.dq);
  }
  oracle *= 2.0 * M_PI / n;
  CHECK(oracle == doctest::Approx(2.0 * M_PI).epsilon(1e-9));

  CHECK(std::abs(symplectic_area(fiber, 512)) <= 1e-9);
  CHECK(std::abs(symplectic_area(geo, 512) - oracle) <= 1e-6);
  CHECK(symplectic_area(constant, 512) == 0.0);

  // Interior quadrature route agrees with the boundary route.
  for (const DiskClass* d : {&fiber, &geo, &constant}) {
    CHECK(std::abs(symplectic_area(*d, 512) - symplectic_area_direct(*d, 512)) <= 1e-5);
  }
}

TEST_CASE("maslov indices of the generator disks") {
  const DiskClass fiber = build_filling(DiskKind::FiberDisk, kFrame);
  const DiskClass geo = build_filling(DiskKind::GeodesicDisk, kFrame);
  const DiskClass constant = build_filling(DiskKind::Constant, kFrame);

  CHECK(disk_maslov_index(fiber, 512) == 0);
  CHECK(disk_maslov_index(geo, 512) == 2);
  CHECK(disk_maslov_index(constant, 512) == 0);
}

TEST_CASE("index survives resolution doubling and trivialization changes") {
  const DiskClass fiber = build_filling(DiskKind::FiberDisk, kFrame);
  const DiskClass geo = build_filling(DiskKind::GeodesicDisk, kFrame);

  for (const int res : {512, 1024, 2048}) {
    CHECK(disk_maslov_index(fiber, res) == 0);
    CHECK(disk_maslov_index(geo, res) == 2);
  }
  for (const TrivializationOptions& alt :
       {TrivializationOptions{0.45, 2.1, 256}, TrivializationOptions{0.3, 4.0, 256}}) {
    CHECK(disk_maslov_index(fiber, 512, alt) == 0);
    CHECK(disk_maslov_index(geo, 512, alt) == 2);
  }
}

TEST_CASE("monotonicity") {
  const MonotonicityReport rep = monotonicity_check(kFrame, 512);
  CHECK(rep.fiber_index == 0);
  CHECK(std::abs(rep.fiber_area) <= 1e-9);
  CHECK(rep.constant == doctest::Approx(M_PI).epsilon(1e-6));
  CHECK(rep.minimal_maslov == 2);
}

TEST_CASE("broken boundary loops are rejected") {
  DiskClass broken = build_filling(DiskKind::GeodesicDisk, kFrame);
  broken.boundary = [](double theta) {
    return torus_embed(TorusPoint{0.9 * theta, 0.0}, FrameAtNorthPole::standard(2));
  };
  CHECK_THROWS_AS(symplectic_area(broken, 512), NonClosedBoundary);
}

TEST_CASE("expected moduli dimension is the index difference plus the class index") {
  CHECK(expected_dimension(2, 1, 0) == 1);
  CHECK(expected_dimension(0, 2, 2) == 0);
  for (int k = 0; k <= 2; ++k) CHECK(expected_dimension(k, k, 0) == 0);
}
