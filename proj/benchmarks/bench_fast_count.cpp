#include <benchmark/benchmark.h>

#include "trib/closed_forms.hpp"
#include "trib/fast_count.hpp"
#include "trib/oracle.hpp"

using namespace trib;

namespace {

constexpr long long kNear = 1'000'000'000'000'000LL;

void BM_AlgorithmB(benchmark::State& state) {
  const auto& fast = FastCounter::standard();
  ExactInt n = kNear;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fast.algorithm_B(n));
    n += 7919;
  }
}
BENCHMARK(BM_AlgorithmB);

void BM_AlgorithmD(benchmark::State& state) {
  const auto& fast = FastCounter::standard();
  ExactInt n = kNear;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fast.algorithm_D(n));
    n += 7919;
  }
}
BENCHMARK(BM_AlgorithmD);

void BM_PointCountB(benchmark::State& state) {
  const auto& fast = FastCounter::standard();
  ExactInt n = kNear;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fast.b_at(n));
    n += 7919;
  }
}
BENCHMARK(BM_PointCountB);

void BM_DistinctSquares(benchmark::State& state) {
  ExactInt n = kNear;
  for (auto _ : state) {
    benchmark::DoNotOptimize(distinct_squares(n));
    n += 7919;
  }
}
BENCHMARK(BM_DistinctSquares);

void BM_OracleScan(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Oracle oracle(n);
  for (auto _ : state) benchmark::DoNotOptimize(oracle.scan_repetitions(n));
}
BENCHMARK(BM_OracleScan)->Arg(1000)->Arg(3000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
