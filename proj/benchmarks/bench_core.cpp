#include <benchmark/benchmark.h>

#include "lagtor/gf2.hpp"
#include "lagtor/maslov.hpp"
#include "lagtor/morse.hpp"
#include "lagtor/random.hpp"
#include "lagtor/torus.hpp"

namespace {

using namespace lagtor;

void BM_GeodesicFlow(benchmark::State& state) {
  Sampler rng(1);
  const CotangentPoint x = rng.cotangent_point(2, 0.5, 1.5);
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(geodesic_flow(x, t));
    t += 0.1;
  }
}
BENCHMARK(BM_GeodesicFlow);

void BM_TorusEmbed(benchmark::State& state) {
  const FrameAtNorthPole frame = FrameAtNorthPole::standard(2);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(torus_embed(TorusPoint{t, 2.0 * t}, frame));
    t += 1e-3;
  }
}
BENCHMARK(BM_TorusEmbed);

void BM_VerifyLagrangian(benchmark::State& state) {
  const FrameAtNorthPole frame = FrameAtNorthPole::standard(2);
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_lagrangian(grid, frame));
  }
  state.SetItemsProcessed(state.iterations() * grid * grid);
}
BENCHMARK(BM_VerifyLagrangian)->Arg(64)->Arg(256);

void BM_DiskMaslovGeodesic(benchmark::State& state) {
  const FrameAtNorthPole frame = FrameAtNorthPole::standard(2);
  const DiskClass geo = build_filling(DiskKind::GeodesicDisk, frame);
  const int res = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(disk_maslov_index(geo, res));
  }
}
BENCHMARK(BM_DiskMaslovGeodesic)->Arg(128)->Arg(512);

void BM_SymplecticAreaStokes(benchmark::State& state) {
  const FrameAtNorthPole frame = FrameAtNorthPole::standard(2);
  const DiskClass geo = build_filling(DiskKind::GeodesicDisk, frame);
  for (auto _ : state) {
    benchmark::DoNotOptimize(symplectic_area(geo, 512));
  }
}
BENCHMARK(BM_SymplecticAreaStokes);

void BM_CountFlowLines(benchmark::State& state) {
  const MorseFunctionSpec spec{0.01};
  const auto cps = critical_points(spec);
  const CriticalPoint* top = nullptr;
  const CriticalPoint* saddle = nullptr;
  for (const auto& cp : cps) {
    if (cp.index == 2) top = &cp;
    if (cp.index == 1 && !saddle) saddle = &cp;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_flow_lines(*top, *saddle, spec));
  }
}
BENCHMARK(BM_CountFlowLines);

void BM_Gf2Rank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Sampler rng(7);
  Gf2Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = rng.uniform() < 0.5 ? 1 : 0;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.rank());
  }
}
BENCHMARK(BM_Gf2Rank)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
