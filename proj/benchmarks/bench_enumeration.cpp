#include <benchmark/benchmark.h>

#include "kchord/diagram.hpp"

namespace {

void BM_Enumerate(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  const auto n = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    std::uint64_t count = 0;
    kchord::enumerate_diagrams(k, n, [&](kchord::DiagramView) { ++count; });
    benchmark::DoNotOptimize(count);
    state.SetItemsProcessed(state.items_processed() + static_cast<std::int64_t>(count));
  }
}
BENCHMARK(BM_Enumerate)->Args({2, 6})->Args({3, 4})->Args({4, 3});

void BM_EnumerateWithStats(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  const auto n = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    std::uint64_t nc = 0, count = 0;
    kchord::enumerate_diagrams(k, n, [&](kchord::DiagramView d) {
      nc += kchord::stats(d).noncrossing;
      ++count;
    });
    benchmark::DoNotOptimize(nc);
    state.SetItemsProcessed(state.items_processed() + static_cast<std::int64_t>(count));
  }
}
BENCHMARK(BM_EnumerateWithStats)->Args({2, 6})->Args({3, 4})->Args({4, 3});

void BM_OracleHistograms(benchmark::State& state) {
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kchord::oracle_histograms(3, 4, threads, 10'000'000));
}
BENCHMARK(BM_OracleHistograms)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
