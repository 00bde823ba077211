#include <benchmark/benchmark.h>

#include "clf/sequences.hpp"

namespace {

void BM_FillS(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    clf::Sequences seq;
    benchmark::DoNotOptimize(seq.S(n));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FillS)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_FillFranel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    clf::Sequences seq;
    benchmark::DoNotOptimize(seq.F(n));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FillFranel)->RangeMultiplier(4)->Range(64, 1024)->Complexity();

void BM_ClosedFormZagier(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(clf::clf_S_closed(n, clf::SClosedForm::Zagier));
}
BENCHMARK(BM_ClosedFormZagier)->Arg(50)->Arg(200);

void BM_ClosedFormConvolution(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(clf::clf_P_closed(n, clf::PClosedForm::Convolution));
}
BENCHMARK(BM_ClosedFormConvolution)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
