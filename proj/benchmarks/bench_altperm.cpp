#include <benchmark/benchmark.h>

#include "altperm/oracle.hpp"

using namespace altperm;

namespace {

const GroupParams g65{6, 5};

ColoredPermutation worked_example() {
  return ColoredPermutation::parse(g65, "1 2^2 4 5^1 3^3");
}

void BM_Multiply(benchmark::State& state) {
  const auto pi = worked_example();
  const auto rho = pi.inverse();
  for (auto _ : state) {
    benchmark::DoNotOptimize(pi * rho);
  }
}
BENCHMARK(BM_Multiply);

void BM_RankUnrank(benchmark::State& state) {
  const auto pi = worked_example();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ColoredPermutation::unrank(g65, pi.rank()));
  }
}
BENCHMARK(BM_RankUnrank);

void BM_CanonicalAWord(benchmark::State& state) {
  const auto pi = worked_example();
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_a_word(pi));
  }
}
BENCHMARK(BM_CanonicalAWord);

void BM_StructuredDecomposition(benchmark::State& state) {
  const auto pi = worked_example();
  for (auto _ : state) {
    benchmark::DoNotOptimize(structured_decomposition(pi));
  }
}
BENCHMARK(BM_StructuredDecomposition);

void BM_LengthLA(benchmark::State& state) {
  const auto pi = worked_example();
  for (auto _ : state) {
    benchmark::DoNotOptimize(length_LA(pi));
  }
}
BENCHMARK(BM_LengthLA);

void BM_FiberReport(benchmark::State& state) {
  const auto pi = worked_example();
  for (auto _ : state) {
    benchmark::DoNotOptimize(fiber_report(pi));
  }
}
BENCHMARK(BM_FiberReport);

// n is the argument; BFS covers the whole of G_{6,n}.
void BM_BfsAlternating(benchmark::State& state) {
  const GroupParams params{6, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        bfs_lengths(params, BfsTarget::AlternatingWithA));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(group_order(params)));
}
BENCHMARK(BM_BfsAlternating)->Arg(2)->Arg(3)->Arg(4);

void BM_GenfunLengthFormula(benchmark::State& state) {
  const GroupParams params{6, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(genfun_length_formula(params));
  }
}
BENCHMARK(BM_GenfunLengthFormula)->Arg(3)->Arg(5);

void BM_GenfunLengthBruteForce(benchmark::State& state) {
  const GroupParams params{6, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        genfun_bruteforce(params, Statistic::Length, kDefaultCap));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(alternating_order(params)));
}
BENCHMARK(BM_GenfunLengthBruteForce)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
