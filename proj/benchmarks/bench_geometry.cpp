#include <benchmark/benchmark.h>

#include <random>

#include "omltopo/geometry.hpp"

using namespace omltopo::geom;

static void BM_ProjectedDotRange(benchmark::State& state) {
  const Angle theta{0.9};
  for (auto _ : state) {
    DotRange range = projected_dot_range(theta, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(range);
  }
}
BENCHMARK(BM_ProjectedDotRange)->Arg(100)->Arg(200)->Arg(400);

static void BM_WitnessStep(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const auto [a, b] = random_line_pair(rng, ladder_angle(2));
  for (auto _ : state) {
    WitnessPlanes planes = witness_step(a, b, 2);
    benchmark::DoNotOptimize(planes);
  }
}
BENCHMARK(BM_WitnessStep);

static void BM_ChainWitness(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  std::mt19937_64 rng(6);
  const auto [a, b] = random_line_pair(rng, ladder_angle(depth));
  for (auto _ : state) {
    auto chain = chain_witness(a, b, depth);
    benchmark::DoNotOptimize(chain);
  }
}
BENCHMARK(BM_ChainWitness)->DenseRange(1, 6);

static void BM_SubspaceDistance(benchmark::State& state) {
  const Subspace3 a = Subspace3::span({Vec3{1, 0, 0}, Vec3{0, 1, 0}});
  const Subspace3 b = Subspace3::span({Vec3{1, 0, 0.2}, Vec3{0, 1, 0.4}});
  for (auto _ : state) {
    Angle d = subspace_distance(a, b);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_SubspaceDistance);
