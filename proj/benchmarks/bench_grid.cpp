#include <benchmark/benchmark.h>

#include "hdw/grid.hpp"

using namespace hdw;

static void BM_EnumerateLines2D(benchmark::State& state) {
  GridSpec g(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_lines(g, 3));
}
BENCHMARK(BM_EnumerateLines2D)->Arg(8)->Arg(16)->Arg(32);

static void BM_EnumerateLines3D(benchmark::State& state) {
  GridSpec g(state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_lines(g, 3));
}
BENCHMARK(BM_EnumerateLines3D)->Arg(4)->Arg(6)->Arg(8);

static void BM_CollinearTupleCount(benchmark::State& state) {
  GridSpec g(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(count_collinear_tuples(g, 3));
}
BENCHMARK(BM_CollinearTupleCount)->Arg(8)->Arg(16)->Arg(32);
