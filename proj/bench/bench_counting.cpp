#include <benchmark/benchmark.h>

#include "toric/cactus.hpp"
#include "toric/constructions.hpp"
#include "toric/lattice_count.hpp"

namespace {

using toric::CountingPlan;

// args: dimension, dilation
void BM_CrossSerial(benchmark::State& state) {
  const CountingPlan plan = toric::make_counting_plan(toric::cross_polytope(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(toric::count_lattice_points_serial(plan, state.range(1)));
}

void BM_CrossParallel(benchmark::State& state) {
  const CountingPlan plan = toric::make_counting_plan(toric::cross_polytope(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(toric::count_lattice_points_parallel(plan, state.range(1)));
}

void BM_SmallCrossSerial(benchmark::State& state) {
  const CountingPlan plan =
      toric::make_counting_plan(toric::small_cross_polytope(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(toric::count_lattice_points_serial(plan, state.range(1)));
}

void BM_SmallCrossParallel(benchmark::State& state) {
  const CountingPlan plan =
      toric::make_counting_plan(toric::small_cross_polytope(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(toric::count_lattice_points_parallel(plan, state.range(1)));
}

void BM_EnumerateCacti(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(toric::enumerate_cacti(static_cast<std::size_t>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_CrossSerial)->Args({6, 8})->Args({8, 9})->Args({10, 11})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrossParallel)->Args({6, 8})->Args({8, 9})->Args({10, 11})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SmallCrossSerial)->Args({6, 8})->Args({8, 9})->Args({10, 11})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SmallCrossParallel)->Args({6, 8})->Args({8, 9})->Args({10, 11})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateCacti)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
