#include <benchmark/benchmark.h>

#include "fixfactor/census.hpp"
#include "fixfactor/ladder/audit.hpp"

namespace {

using namespace fixfactor;

void BM_StabilizeSamples(benchmark::State& state) {
  const auto systems = census::sample_systems(static_cast<std::size_t>(state.range(0)), 200, 7);
  for (auto _ : state) {
    for (const auto& sys : systems) benchmark::DoNotOptimize(stabilize(sys));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(systems.size()));
}
BENCHMARK(BM_StabilizeSamples)->Arg(3)->Arg(4)->Arg(5);

void BM_Census(benchmark::State& state) {
  census::CensusOptions options;
  options.points = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census::run_census(options));
}
BENCHMARK(BM_Census)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_LadderTrace(benchmark::State& state, const char* term) {
  const auto space = ladder::LadderSpace::build(ladder::parse_term(term));
  for (auto _ : state) benchmark::DoNotOptimize(ladder::ladder_trace(space));
}
BENCHMARK_CAPTURE(BM_LadderTrace, cat_strand, "cat(strand)");
BENCHMARK_CAPTURE(BM_LadderTrace, ramp, "ramp");
BENCHMARK_CAPTURE(BM_LadderTrace, cat_ramp, "cat(ramp)");

void BM_WindowAudit(benchmark::State& state, const char* term) {
  const auto space = ladder::LadderSpace::build(ladder::parse_term(term));
  const auto trace = ladder::ladder_trace(space);
  const auto cut = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    const auto w = ladder::Window::build(space, cut, cut);
    benchmark::DoNotOptimize(ladder::audit_trace(w, trace));
  }
}
BENCHMARK_CAPTURE(BM_WindowAudit, cat_strand, "cat(strand)")->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_WindowAudit, ramp, "ramp")->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
