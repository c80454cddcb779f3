// Serial vs OpenMP kernels on random relations.

#include <benchmark/benchmark.h>

#include <random>

#include "epdl/kernels.hpp"

using namespace epdl;

namespace {

BitMatrix random_matrix(std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(density);
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (edge(rng)) m.set(i, j);
  return m;
}

template <BitMatrix (*Multiply)(const BitMatrix&, const BitMatrix&)>
void bm_multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BitMatrix a = random_matrix(n, 0.05, 1), b = random_matrix(n, 0.05, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Multiply(a, b));
}

// Sparse enough that the closure needs several rounds.
template <BitMatrix (*Star)(const BitMatrix&)>
void bm_star(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BitMatrix m = random_matrix(n, 1.5 / static_cast<double>(n), 3);
  for (auto _ : state) benchmark::DoNotOptimize(Star(m));
}

}  // namespace

BENCHMARK(bm_multiply<kernels::serial::multiply>)->Name("multiply/serial")->RangeMultiplier(4)->Range(64, 2048);
BENCHMARK(bm_multiply<kernels::parallel::multiply>)->Name("multiply/parallel")->RangeMultiplier(4)->Range(64, 2048);
BENCHMARK(bm_star<kernels::serial::star>)->Name("star/serial")->RangeMultiplier(4)->Range(64, 1024);
BENCHMARK(bm_star<kernels::parallel::star>)->Name("star/parallel")->RangeMultiplier(4)->Range(64, 1024);

BENCHMARK_MAIN();
