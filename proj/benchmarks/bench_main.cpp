#include <benchmark/benchmark.h>

#include "hftlab/friedrichs.hpp"
#include "hftlab/hft.hpp"
#include "hftlab/profiles.hpp"

using namespace hftlab;

namespace {

SampledHalfLineFunction gauss() {
  return SampledHalfLineFunction::sample(default_source_grid(), profile_by_name("gauss").f);
}

void BM_SampleLine(benchmark::State& state) {
  const auto f = gauss();
  const auto x = uniform_nodes(-40.0, 40.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sample_line(f, 1.0, x));
  state.SetItemsProcessed(state.iterations() * state.range(0) * static_cast<int64_t>(f.size()));
}
BENCHMARK(BM_SampleLine)->Arg(501)->Arg(2001)->Unit(benchmark::kMillisecond);

void BM_Inverse(benchmark::State& state) {
  const auto phi = sample_line(gauss(), 1.0, default_line_nodes());
  const auto target = QuadratureGrid::truncated_uniform(5.0, static_cast<std::size_t>(state.range(0)), 16);
  for (auto _ : state) benchmark::DoNotOptimize(inverse_hft(phi, target));
  state.counters["target_nodes"] = static_cast<double>(target.size());
}
BENCHMARK(BM_Inverse)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_Roundtrip(benchmark::State& state) {
  const auto& p = profile_by_name("s2exp");
  for (auto _ : state) benchmark::DoNotOptimize(roundtrip(p.f, 1.0).relative_error);
}
BENCHMARK(BM_Roundtrip)->Unit(benchmark::kMillisecond);

void BM_SqrtFriedrichs(benchmark::State& state) {
  const auto op = build_friedrichs_Zsq(20.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sqrt_friedrichs(op).matrix.data());
}
BENCHMARK(BM_SqrtFriedrichs)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_TridiagonalEigen(benchmark::State& state) {
  const auto op = build_friedrichs_Zsq(20.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(op).eigenvalues.data());
}
BENCHMARK(BM_TridiagonalEigen)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
