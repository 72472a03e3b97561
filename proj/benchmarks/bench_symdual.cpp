#include <benchmark/benchmark.h>

#include <random>

#include "symdual/avoidance.hpp"
#include "symdual/counting.hpp"
#include "symdual/dual_core.hpp"
#include "symdual/lattice_geometry.hpp"
#include "symdual/oracle.hpp"
#include "test_support.hpp"

using namespace symdual;
using namespace symdual::testing;

static void BM_MinGensOneOrbit(benchmark::State& state) {
  GeneratorSystem g = one_orbit_system();
  for (auto _ : state) benchmark::DoNotOptimize(min_gens(g, state.range(0)));
}
BENCHMARK(BM_MinGensOneOrbit)->Arg(6)->Arg(12)->Arg(24);

static void BM_MinGensTwoOrbit(benchmark::State& state) {
  GeneratorSystem g = two_orbit_system();
  for (auto _ : state) benchmark::DoNotOptimize(min_gens(g, state.range(0)));
}
BENCHMARK(BM_MinGensTwoOrbit)->Arg(6)->Arg(12)->Arg(24);

static void BM_BruteMinGens(benchmark::State& state) {
  GeneratorSystem g = one_orbit_system();
  for (auto _ : state) benchmark::DoNotOptimize(brute_min_gens_dual(g, state.range(0)));
}
BENCHMARK(BM_BruteMinGens)->Arg(4)->Arg(5)->Arg(6);

static void BM_CountSeries(benchmark::State& state) {
  GeneratorSystem g = two_orbit_system();
  for (auto _ : state) benchmark::DoNotOptimize(dual_count_series(g, 4, state.range(0)));
}
BENCHMARK(BM_CountSeries)->Arg(9)->Arg(16);

static void BM_Avoidance(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  auto f = random_values(rng, 3, n);
  auto g = random_values(rng, 3, n);
  for (auto _ : state) benchmark::DoNotOptimize(find_avoiding_permutation(3, f, g));
}
BENCHMARK(BM_Avoidance)->Arg(6)->Arg(64)->Arg(1024);

static void BM_Divides(benchmark::State& state) {
  TypeVector bp(3, {{S({1}), 3}, {S({2, 3}), 2}});
  TypeVector b(3, {{S({1, 2}), 3}, {S({1, 2, 3}), 2}, {S({3}), 4}});
  for (auto _ : state) benchmark::DoNotOptimize(divides_up_to_sym(bp, b, 12));
}
BENCHMARK(BM_Divides);

static void BM_ConeDecompose(benchmark::State& state) {
  std::mt19937_64 rng(2);
  SumPolyhedron p = random_polyhedron(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cone_decompose(p));
}
BENCHMARK(BM_ConeDecompose)->Arg(3)->Arg(4)->Arg(6);

static void BM_OrderIdeals(benchmark::State& state) {
  const int c = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_order_ideal_word(c, [&](std::uint64_t) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_OrderIdeals)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
