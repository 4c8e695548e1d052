#include <benchmark/benchmark.h>

#include "omltopo/topology.hpp"

using namespace omltopo;

static void BM_ValidateBoolean(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    FiniteOml lattice = make_boolean(k);
    benchmark::DoNotOptimize(lattice);
  }
}
BENCHMARK(BM_ValidateBoolean)->DenseRange(2, 5);

static void BM_AtomProfile(benchmark::State& state) {
  const FiniteOml lattice = make_mo(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    AtomRelationProfile profile = atom_relation_profile(lattice);
    benchmark::DoNotOptimize(profile);
  }
}
BENCHMARK(BM_AtomProfile)->Arg(4)->Arg(16)->Arg(48);

static void BM_GeneralProfile(benchmark::State& state) {
  const FiniteOml lattice = make_boolean(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    GeneralRelationProfile profile = general_relation_profile(lattice);
    benchmark::DoNotOptimize(profile);
  }
}
BENCHMARK(BM_GeneralProfile)->DenseRange(2, 5);

static void BM_LowerClosure(benchmark::State& state) {
  const FiniteOml lattice = make_boolean(static_cast<int>(state.range(0)));
  const SmashedPoset carrier(lattice.order());
  Bitset seed(carrier.size());
  for (int idx = 0; idx < carrier.size(); ++idx) {
    const auto [a, b] = carrier.pair_at(idx);
    if (lattice.leq(a, lattice.ortho(b))) seed.set(idx);
  }
  for (auto _ : state) {
    Bitset closed = lower_complement(carrier.poset(), lower_complement(carrier.poset(), seed));
    benchmark::DoNotOptimize(closed);
  }
}
BENCHMARK(BM_LowerClosure)->DenseRange(2, 5);

static void BM_GeneralBalls(benchmark::State& state) {
  const FiniteOml lattice = make_boolean(static_cast<int>(state.range(0)));
  const GeneralRelationProfile profile = general_relation_profile(lattice);
  for (auto _ : state) {
    for (int a = 0; a < lattice.size(); ++a) {
      auto ball = general_ball(lattice, profile, a, 0);
      benchmark::DoNotOptimize(ball);
    }
  }
}
BENCHMARK(BM_GeneralBalls)->DenseRange(2, 4);

BENCHMARK_MAIN();
