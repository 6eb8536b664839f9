#include <benchmark/benchmark.h>

#include "lco/analysis.hpp"
#include "lco/operator.hpp"
#include "lco/sequence.hpp"
#include "lco/seqspec.hpp"
#include "lco/series.hpp"

namespace {

lco::Sequence pascal_row(std::int64_t n) {
  return lco::materialize(
      lco::builtin_family("binomial_row", {{"n", lco::Scalar::exact(static_cast<long>(n))}}),
      1);
}

lco::Sequence geometric_half(std::int64_t horizon) {
  return lco::materialize(
      lco::builtin_family("geometric", {{"r", lco::Scalar::rational(1, 2)}}),
      horizon);
}

void BM_ApplyOnce_PascalRow(benchmark::State& state) {
  const lco::Sequence seq = pascal_row(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lco::apply_l(seq));
  }
}
BENCHMARK(BM_ApplyOnce_PascalRow)->Arg(16)->Arg(64)->Arg(256);

void BM_Iterate_Geometric(benchmark::State& state) {
  const lco::Sequence seq = geometric_half(64);
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lco::iterate_l(seq, depth));
  }
}
BENCHMARK(BM_Iterate_Geometric)->Arg(1)->Arg(3)->Arg(5);

void BM_ProbeDepth_PascalRow(benchmark::State& state) {
  const lco::Sequence seq = pascal_row(32);
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lco::probe_depth(seq, depth));
  }
}
BENCHMARK(BM_ProbeDepth_PascalRow)->Arg(1)->Arg(2)->Arg(3);

void BM_PartialSums_Geometric(benchmark::State& state) {
  const lco::Sequence seq = geometric_half(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lco::partial_sums(seq));
  }
}
BENCHMARK(BM_PartialSums_Geometric)->Arg(64)->Arg(256);

void BM_EstimateDecay_Geometric(benchmark::State& state) {
  const lco::Sequence seq = geometric_half(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lco::estimate_decay(seq));
  }
}
BENCHMARK(BM_EstimateDecay_Geometric)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
