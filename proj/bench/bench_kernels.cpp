// Parallel kernels against their serial references.

#include <random>

#include <benchmark/benchmark.h>

#include "chevalley/autos.hpp"
#include "chevalley/linalg.hpp"
#include "chevalley/tits.hpp"

using namespace chevalley;

namespace {

Matrix dense(std::size_t dim, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  Matrix m(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      m(r, c) = Rational(num(gen), den(gen));
      m(r, c).canonicalize();
    }
  return m;
}

// tau_1 tau_2 on sl(n+1): sparse signed-permutation-like operators of size d = (n+1)^2 - 1
void BM_TauProduct_Reference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = tau_generator(n, 1).matrix(), b = tau_generator(n, 2).matrix();
  for (auto _ : state)
    benchmark::DoNotOptimize(reference::mat_mul(a, b));
}

void BM_TauProduct_Parallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = tau_generator(n, 1).matrix(), b = tau_generator(n, 2).matrix();
  for (auto _ : state)
    benchmark::DoNotOptimize(mat_mul(a, b));
}

void BM_Dense_Reference(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto a = dense(dim, 1), b = dense(dim, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(reference::mat_mul(a, b));
}

void BM_Dense_Parallel(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto a = dense(dim, 1), b = dense(dim, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(mat_mul(a, b));
}

void BM_AdjointSweep(benchmark::State& state, Execution exec) {
  const StandardAutomorphisms taus(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_theorem1(taus, exec));
}

void BM_GroupSweep(benchmark::State& state, Execution exec) {
  const auto s = TitsSection::ones(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_group_relations(s, exec));
}

} // namespace

BENCHMARK(BM_TauProduct_Reference)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_TauProduct_Parallel)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Dense_Reference)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Dense_Parallel)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AdjointSweep, serial, Execution::Serial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AdjointSweep, parallel, Execution::Parallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_GroupSweep, serial, Execution::Serial)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_GroupSweep, parallel, Execution::Parallel)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
