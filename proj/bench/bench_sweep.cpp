// Serial reference vs OpenMP sweeps. Run with OMP_NUM_THREADS set to the
// thread count of interest.

#include <benchmark/benchmark.h>

#include <random>

#include "contact1d/regularization.hpp"
#include "contact1d/sweep.hpp"

namespace {

using namespace contact1d;

std::vector<Mat2R> random_matrices(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  std::vector<Mat2R> out;
  out.reserve(n);
  while (out.size() < n) {
    Mat2R m{d(rng), d(rng), d(rng), d(rng)};
    const double det = m.det();
    if (std::abs(det) < 0.1) continue;
    m.m11 /= det;
    m.m12 /= det;
    out.push_back(m);
  }
  return out;
}

template <auto Sweep>
void BM_ScatterSweep(benchmark::State& state) {
  const auto ks = make_grid(0.01, 10.0, static_cast<int>(state.range(0)), true);
  const Mat2R v{2, 3, 1, 2};
  for (auto _ : state) benchmark::DoNotOptimize(Sweep(v, ks));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Sweep>
void BM_ChainSweep(benchmark::State& state) {
  const auto ks = make_grid(0.1, 3.0, static_cast<int>(state.range(0)), false);
  const auto chain = three_delta_chain(ThreeDeltaConfig(1.0, 1e-4, 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(Sweep(chain, ks));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Batch>
void BM_DecomposeBatch(benchmark::State& state) {
  const auto ms = random_matrices(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Batch(ms));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_ScatterSweep<serial::scatter_sweep>)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_ScatterSweep<parallel::scatter_sweep>)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_ChainSweep<serial::scatter_chain_sweep>)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_ChainSweep<parallel::scatter_chain_sweep>)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_DecomposeBatch<serial::decompose_batch>)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_DecomposeBatch<parallel::decompose_batch>)->Arg(1 << 12)->Arg(1 << 16);

}  // namespace

BENCHMARK_MAIN();
