#include <benchmark/benchmark.h>

#include "permstat/indicator_moment.hpp"
#include "permstat/moments.hpp"
#include "permstat/patterns.hpp"

namespace {

using namespace permstat;

// One path on k edges; its support k + 1 sets the size of the Möbius sum.
void BM_IndicatorMomentPath(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  CyclePathType type{{}, {k}};
  for (auto _ : state) {
    (void)_;
    benchmark::DoNotOptimize(compute_indicator_moment(type));
  }
  state.SetLabel("Bell(" + std::to_string(k + 1) + ")");
}

BENCHMARK(BM_IndicatorMomentPath)->DenseRange(2, 7)->Unit(benchmark::kMillisecond);

void BM_ProductMaj(benchmark::State& state) {
  RegularStatistic maj = major_index();
  for (auto _ : state) {
    (void)_;
    benchmark::DoNotOptimize(maj * maj);
  }
}

BENCHMARK(BM_ProductMaj)->Unit(benchmark::kMillisecond);

// Fresh indicator cache each iteration so the Möbius sums are included.
void BM_ClassMoment(benchmark::State& state, const char* name) {
  RegularStatistic psi = builtin(name);
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    (void)_;
    IndicatorMoments moments;
    benchmark::DoNotOptimize(moment(psi, d, moments));
  }
}

BENCHMARK_CAPTURE(BM_ClassMoment, exc, "exc")->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ClassMoment, maj, "maj")->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_UniformMoment(benchmark::State& state) {
  RegularStatistic inv = inversions();
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    (void)_;
    benchmark::DoNotOptimize(uniform_moment(inv, d));
  }
}

BENCHMARK(BM_UniformMoment)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
