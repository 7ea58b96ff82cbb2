#include <benchmark/benchmark.h>

#include "hdw/coloring.hpp"
#include "hdw/randcon.hpp"
#include "hdw/solver.hpp"

using namespace hdw;

static void BM_IndependentSetExhaustive(benchmark::State& state) {
  auto pts = grid_points(GridSpec(state.range(0), 2));
  for (auto _ : state)
    benchmark::DoNotOptimize(find_independent_set(pts, 3, 0, 1'000'000'000));
}
BENCHMARK(BM_IndependentSetExhaustive)->Arg(3)->Arg(4);

static void BM_SampleAndDelete(benchmark::State& state) {
  GridSpec g(state.range(0), 2);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(make_run(g, 0.3, 4, seed++));
}
BENCHMARK(BM_SampleAndDelete)->Arg(16)->Arg(32)->Arg(64);

static void BM_ChromaticGreedy(benchmark::State& state) {
  std::vector<PlanarPoint> pts;
  for (const auto& p : grid_points(GridSpec(state.range(0), 2)))
    pts.push_back({p[0], p[1]});
  auto H = build_Hq(pts, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(hq_chromatic_number(H, 0));  // greedy only
}
BENCHMARK(BM_ChromaticGreedy)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
