#include <benchmark/benchmark.h>

#include "loopon/enumerate.hpp"
#include "loopon/mc.hpp"
#include "loopon/rational.hpp"
#include "loopon/saw.hpp"

using namespace loopon;

static void BM_PartitionFunctionFloat(benchmark::State& state) {
  const LatticeKind z2 = LatticeKind::hypercubic(2);
  Domain g = box_domain(z2, {0, 0}, {static_cast<int>(state.range(0)),
                                     static_cast<int>(state.range(0))});
  ModelParams<double> p{0.5, 1.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(partition_function(g, p, 64));
}
BENCHMARK(BM_PartitionFunctionFloat)->DenseRange(2, 5);

static void BM_PartitionFunctionRational(benchmark::State& state) {
  const LatticeKind z2 = LatticeKind::hypercubic(2);
  Domain g = box_domain(z2, {0, 0}, {static_cast<int>(state.range(0)),
                                     static_cast<int>(state.range(0))});
  ModelParams<Rational> p{Rational(1, 2), Rational(2)};
  for (auto _ : state)
    benchmark::DoNotOptimize(partition_function(g, p, 64));
}
BENCHMARK(BM_PartitionFunctionRational)->DenseRange(2, 4);

static void BM_SawCount(benchmark::State& state) {
  const LatticeKind z2 = LatticeKind::hypercubic(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        enumerate_saws(z2, {0, 0}, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SawCount)->DenseRange(6, 12, 2);

static void BM_SapCount(benchmark::State& state) {
  const LatticeKind z2 = LatticeKind::hypercubic(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        sap_count(z2, {0, 0}, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SapCount)->DenseRange(8, 14, 2);

static void BM_McStep(benchmark::State& state) {
  Domain g = box_domain(LatticeKind::hexagonal(), {0, 0},
                        {static_cast<int>(state.range(0)),
                         static_cast<int>(state.range(0))});
  Chain chain(g, {0.6, 1.0}, 1);
  for (auto _ : state) chain.step();
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_McStep)->Arg(6)->Arg(10);

BENCHMARK_MAIN();
