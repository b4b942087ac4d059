// Schedules of the backward recursion and the pixel counter, serial vs parallel.

#include "msarea/engine.h"
#include "msarea/pixel.h"
#include "msarea/reference.h"

#include <benchmark/benchmark.h>

using namespace msarea;

namespace {

void BM_ReferenceFloat(benchmark::State& state) {
  for (auto _ : state) {
    ReferenceTable<double> t(state.range(0));
    benchmark::DoNotOptimize(t.get(0, state.range(0)));
  }
}

void BM_SingleColumnFloat(benchmark::State& state) {
  for (auto _ : state) {
    FloatTable t;
    benchmark::DoNotOptimize(run(t, state.range(0)).b.back());
  }
}

void BM_BatchedFloat(benchmark::State& state) {
  RunOptions o;
  o.width = 4;
  o.row_threshold = 2;
  o.workers = static_cast<int>(state.range(1));
  for (auto _ : state) {
    FloatTable t;
    benchmark::DoNotOptimize(run(t, state.range(0), o).b.back());
  }
}

void BM_ReferenceExact(benchmark::State& state) {
  for (auto _ : state) {
    ReferenceTable<DyadicRational> t(state.range(0));
    benchmark::DoNotOptimize(t.get(0, state.range(0)));
  }
}

void BM_BatchedExact(benchmark::State& state) {
  RunOptions o;
  o.width = 4;
  o.row_threshold = 2;
  o.workers = static_cast<int>(state.range(1));
  for (auto _ : state) {
    ExactTable t;
    benchmark::DoNotOptimize(run(t, state.range(0), o).b.back());
  }
}

GridSpec bench_grid(std::int64_t cells) {
  GridSpec g;
  g.re_cells = g.im_cells = cells;
  g.max_iter = 10000;
  return g;
}

void BM_PixelPlain(benchmark::State& state) {
  const auto g = bench_grid(state.range(0));
  for (auto _ : state) {
    std::int64_t count = 0;
    for (std::int64_t j = 0; j < g.im_cells; ++j)
      for (std::int64_t i = 0; i < g.re_cells; ++i) {
        const double x = g.re_min + (g.re_max - g.re_min) * (i + 0.5) / g.re_cells;
        const double y = g.im_min + (g.im_max - g.im_min) * (j + 0.5) / g.im_cells;
        count += !escapes_plain({x, y}, g.max_iter);
      }
    benchmark::DoNotOptimize(count);
  }
}

void BM_PixelSerial(benchmark::State& state) {
  const auto g = bench_grid(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(count_interior_serial(g));
}

void BM_PixelParallel(benchmark::State& state) {
  const auto g = bench_grid(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(count_interior(g, static_cast<int>(state.range(1))));
}

}  // namespace

BENCHMARK(BM_ReferenceFloat)->Arg(4096)->Arg(16384)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SingleColumnFloat)->Arg(4096)->Arg(16384)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchedFloat)->Args({4096, 1})->Args({4096, 4})->Args({16384, 1})->Args({16384, 4})
    ->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ReferenceExact)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchedExact)->Args({512, 1})->Args({512, 4})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PixelPlain)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PixelSerial)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PixelParallel)->Args({512, 1})->Args({512, 4})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
