#include <benchmark/benchmark.h>

#include "kchord/recurrence.hpp"
#include "kchord/series.hpp"

namespace {

void BM_ClosedFormTable(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kchord::d_table_closed_form(3, n));
}
BENCHMARK(BM_ClosedFormTable)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_Kp1Table(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kchord::d_table_kp1(3, n));
}
BENCHMARK(BM_Kp1Table)->Arg(12)->Arg(48)->Unit(benchmark::kMillisecond);

void BM_Kp2Table(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kchord::d_table_kp2(3, n));
}
BENCHMARK(BM_Kp2Table)->Arg(12)->Arg(48)->Unit(benchmark::kMillisecond);

void BM_NoncrossingTable(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kchord::noncrossing_table(3, m));
}
BENCHMARK(BM_NoncrossingTable)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_TSeries(benchmark::State& state) {
  const auto o = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kchord::T_series(3, o, o));
}
BENCHMARK(BM_TSeries)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_ComponentsRow(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kchord::components_row(2, n));
}
BENCHMARK(BM_ComponentsRow)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
