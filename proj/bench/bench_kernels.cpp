// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "plh/harness.hpp"
#include "plh/sampling.hpp"

namespace {

plh::PLHomeo bench_element() {
  plh::gen::Rng rng(7);
  return plh::gen::element(rng, plh::GroupKind::P(), 8, 1L << 12);
}

void BM_SampleSerial(benchmark::State& state) {
  const plh::PLHomeo f = bench_element();
  const int points = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(plh::sample_serial(f, points));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SampleParallel(benchmark::State& state) {
  const plh::PLHomeo f = bench_element();
  const int points = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(plh::sample_parallel(f, points));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void run_suite(benchmark::State& state, const char* suite, plh::harness::Execution execution) {
  plh::harness::Options options;
  options.cases = state.range(0);
  options.execution = execution;
  for (auto _ : state) {
    const plh::harness::SuiteReport r = plh::harness::run_suite(suite, options);
    if (r.failures != 0) state.SkipWithError("suite reported failures");
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SuiteSerial(benchmark::State& state) {
  run_suite(state, "pgroup", plh::harness::Execution::serial);
}
void BM_SuiteParallel(benchmark::State& state) {
  run_suite(state, "pgroup", plh::harness::Execution::parallel);
}

} // namespace

BENCHMARK(BM_SampleSerial)->Arg(1 << 10)->Arg(1 << 14)->UseRealTime();
BENCHMARK(BM_SampleParallel)->Arg(1 << 10)->Arg(1 << 14)->UseRealTime();
BENCHMARK(BM_SuiteSerial)->Arg(50)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SuiteParallel)->Arg(50)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
