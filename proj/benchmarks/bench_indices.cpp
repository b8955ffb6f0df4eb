// Micro-benchmarks for the index computations: pair indices along their
// three routes, cyclic sums along definition / inertia / reduced routes,
// and focal-point counts of discrete systems.

#include <benchmark/benchmark.h>

#include "compidx/comparative_index.hpp"
#include "compidx/cyclic_sums.hpp"
#include "compidx/discrete_systems.hpp"
#include "compidx/frames.hpp"
#include "compidx/verification.hpp"

namespace {

void BM_PairIndexDefinition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto Y = compidx::random_frame(n, 101);
  const auto Yhat = compidx::random_frame(n, 202);
  for (auto _ : state) {
    auto ci = compidx::comparative_index(Y, Yhat);
    benchmark::DoNotOptimize(ci.mu1 + ci.mu2);
  }
}
BENCHMARK(BM_PairIndexDefinition)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_PairIndexQRoute(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto Y = compidx::random_frame(n, 101);
  const auto Yhat = compidx::random_frame(n, 202);
  for (auto _ : state) {
    auto ci = compidx::comparative_index_via_q(Y, Yhat);
    benchmark::DoNotOptimize(ci.mu1 + ci.mu2);
  }
}
BENCHMARK(BM_PairIndexQRoute)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_PairIndexBlockInertia(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto Y = compidx::random_frame(n, 101);
  const auto Yhat = compidx::random_frame(n, 202);
  for (auto _ : state) {
    auto mu = compidx::comparative_index_via_block_inertia(Y, Yhat);
    benchmark::DoNotOptimize(mu.first + mu.second);
  }
}
BENCHMARK(BM_PairIndexBlockInertia)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_CyclicDefinition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  const auto chain = compidx::random_chain(n, m, 7);
  for (auto _ : state) {
    auto sums = compidx::cyclic_sums(chain);
    benchmark::DoNotOptimize(sums.mu_minus + sums.nu_plus);
  }
}
BENCHMARK(BM_CyclicDefinition)->Args({2, 4})->Args({4, 4})->Args({4, 8})->Args({8, 6});

void BM_CyclicInertia(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  const auto chain = compidx::random_chain(n, m, 7);
  for (auto _ : state) {
    auto sums = compidx::cyclic_sum_via_inertia(chain);
    benchmark::DoNotOptimize(sums.first + sums.second);
  }
}
BENCHMARK(BM_CyclicInertia)->Args({2, 4})->Args({4, 4})->Args({4, 8})->Args({8, 6});

void BM_CyclicProjector(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  const auto chain = compidx::random_chain(n, m, 7);
  for (auto _ : state) {
    auto sums = compidx::cyclic_sum_via_reduction(
        chain, compidx::ReducedRoute::projector);
    benchmark::DoNotOptimize(sums.first + sums.second);
  }
}
BENCHMARK(BM_CyclicProjector)->Args({2, 4})->Args({4, 4})->Args({4, 8})->Args({8, 6});

void BM_CyclicSchur(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  const auto chain = compidx::random_chain(n, m, 7);
  for (auto _ : state) {
    auto sums =
        compidx::cyclic_sum_via_reduction(chain, compidx::ReducedRoute::schur);
    benchmark::DoNotOptimize(sums.first + sums.second);
  }
}
BENCHMARK(BM_CyclicSchur)->Args({2, 4})->Args({4, 4})->Args({4, 8})->Args({8, 6});

void BM_FocalTally(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  const auto system = compidx::random_system(n, N, 31);
  for (auto _ : state) {
    auto basis = compidx::principal_solution(system, 0);
    auto tally = compidx::forward_focal_multiplicities(system, basis);
    benchmark::DoNotOptimize(tally.l_total);
  }
}
BENCHMARK(BM_FocalTally)->Args({2, 6})->Args({4, 6})->Args({4, 12});

void BM_FocalInertia(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  const auto system = compidx::random_system(n, N, 31);
  for (auto _ : state) {
    auto counts = compidx::focal_counts_via_inertia(system);
    benchmark::DoNotOptimize(counts.l_star_at_0);
  }
}
BENCHMARK(BM_FocalInertia)->Args({2, 6})->Args({4, 6})->Args({4, 12});

}  // namespace

BENCHMARK_MAIN();
