#include <benchmark/benchmark.h>

#include "scatterlab/forward.hpp"
#include "scatterlab/indicators.hpp"
#include "scatterlab/probes.hpp"

using namespace scatterlab;

namespace {

const FarFieldMatrix& disk_k5() {
  static const FarFieldMatrix f = farfield_dirichlet_obstacle(builtin_shape("omega1"), Wavenumber(5.0), DirectionSet(20));
  return f;
}

void BM_GramSquare(benchmark::State& state) {
  const DirectionSet dirs(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(herglotz_gram_square(Point(0.3, -0.2), 0.1, Wavenumber(5.0), dirs));
  }
}
BENCHMARK(BM_GramSquare)->Arg(20)->Arg(64);

void BM_GramCircle(benchmark::State& state) {
  const DirectionSet dirs(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(herglotz_gram_circle(Point(0.3, -0.2), 1.0, Wavenumber(1.0), dirs));
  }
}
BENCHMARK(BM_GramCircle)->Arg(20)->Arg(64);

void BM_ObstacleSolve(benchmark::State& state) {
  const Curve shape = builtin_shape("omega2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        farfield_dirichlet_obstacle(shape, Wavenumber(5.0), DirectionSet(20), static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_ObstacleSolve)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_MixedCrackSolve(benchmark::State& state) {
  const Curve shape = builtin_shape("gamma3");
  for (auto _ : state) {
    benchmark::DoNotOptimize(farfield_mixed_crack(shape, Wavenumber(1.0), DirectionSet(20)));
  }
}
BENCHMARK(BM_MixedCrackSolve)->Unit(benchmark::kMillisecond);

void BM_MediumSolve(benchmark::State& state) {
  const MediumSpec spec{builtin_shape("omega1"), 1.0, {}, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(farfield_medium(spec, Wavenumber(1.0), DirectionSet(20)));
  }
}
BENCHMARK(BM_MediumSolve)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_MonotonicitySweep(benchmark::State& state) {
  const SamplingGrid grid(1.5, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mm_obstacle_field(disk_k5(), grid, 0.1));
  }
}
BENCHMARK(BM_MonotonicitySweep)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_FactorizationSweep(benchmark::State& state) {
  const SamplingGrid grid(1.5, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fm_field(disk_k5(), grid));
  }
}
BENCHMARK(BM_FactorizationSweep)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
