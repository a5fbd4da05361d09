// Tour-solver microbenchmarks on the two bundled campus instances.
#include <benchmark/benchmark.h>

#include "maci/tsp.hpp"

using namespace maci::tsp;

static void BM_BruteForceFiveSites(benchmark::State& state) {
  auto m = campus5();
  for (auto _ : state) {
    auto r = brute_force(m);
    benchmark::DoNotOptimize(r.optimal_length);
  }
}
BENCHMARK(BM_BruteForceFiveSites);

static void BM_BruteForceTenSites(benchmark::State& state) {
  auto m = campus10();
  for (auto _ : state) {
    auto r = brute_force(m);
    benchmark::DoNotOptimize(r.optimal_length);
  }
}
BENCHMARK(BM_BruteForceTenSites)->Unit(benchmark::kMillisecond);

static void BM_HeldKarpTenSites(benchmark::State& state) {
  auto m = campus10();
  for (auto _ : state) {
    long len = held_karp(m);
    benchmark::DoNotOptimize(len);
  }
}
BENCHMARK(BM_HeldKarpTenSites);

static void BM_NearestNeighborTenSites(benchmark::State& state) {
  auto m = campus10();
  for (auto _ : state) {
    auto t = nearest_neighbor(m);
    benchmark::DoNotOptimize(t.length);
  }
}
BENCHMARK(BM_NearestNeighborTenSites);

static void BM_AcoSmallPresetFiveSites(benchmark::State& state) {
  auto m = campus5();
  std::uint32_t seed = 1;
  for (auto _ : state) {
    auto r = aco(m, AcoParams::small_preset(seed++));
    benchmark::DoNotOptimize(r.tour.length);
  }
}
BENCHMARK(BM_AcoSmallPresetFiveSites)->Unit(benchmark::kMillisecond);

static void BM_AcoLargePresetTenSites(benchmark::State& state) {
  auto m = campus10();
  std::uint32_t seed = 1;
  for (auto _ : state) {
    auto r = aco(m, AcoParams::large_preset(seed++));
    benchmark::DoNotOptimize(r.tour.length);
  }
}
BENCHMARK(BM_AcoLargePresetTenSites)->Unit(benchmark::kMillisecond);

static void BM_GaFiveSites(benchmark::State& state) {
  auto m = campus5();
  GaParams p;
  for (auto _ : state) {
    ++p.seed;
    auto r = ga(m, p);
    benchmark::DoNotOptimize(r.tour.length);
  }
}
BENCHMARK(BM_GaFiveSites)->Unit(benchmark::kMillisecond);

static void BM_SaFiveSites(benchmark::State& state) {
  auto m = campus5();
  SaParams p;
  for (auto _ : state) {
    ++p.seed;
    auto r = sa(m, p);
    benchmark::DoNotOptimize(r.tour.length);
  }
}
BENCHMARK(BM_SaFiveSites);

BENCHMARK_MAIN();
