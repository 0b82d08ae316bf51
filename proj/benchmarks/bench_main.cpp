#include "dposet/algebra.hpp"
#include "dposet/fqsym.hpp"
#include "dposet/linalg.hpp"
#include "dposet/morphisms.hpp"

#include <benchmark/benchmark.h>

using namespace dposet;

static void BM_EnumeratePlane(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_plane(Family::PP, n));
}
BENCHMARK(BM_EnumeratePlane)->DenseRange(3, 6);

static void BM_GramMatrix(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrix(Family::SPP, n));
}
BENCHMARK(BM_GramMatrix)->DenseRange(2, 5);

static void BM_Coproduct(benchmark::State& state) {
  const auto& basis = enumerate(Family::SP, static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& p : basis) benchmark::DoNotOptimize(coproduct(p));
}
BENCHMARK(BM_Coproduct)->DenseRange(2, 4);

static void BM_Theta(benchmark::State& state) {
  const auto& basis = enumerate(Family::SP, static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& p : basis) benchmark::DoNotOptimize(theta(p));
}
BENCHMARK(BM_Theta)->DenseRange(2, 4);

static void BM_ShuffleProduct(benchmark::State& state) {
  auto perms = all_permutations(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fq_product(FQ(perms.front()), FQ(perms.back())));
}
BENCHMARK(BM_ShuffleProduct)->DenseRange(2, 5);

static void BM_Congruence(benchmark::State& state) {
  IntMatrix a = gram_matrix(Family::PP, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(congruence_diagonalize(a));
}
BENCHMARK(BM_Congruence)->DenseRange(2, 4);

static void BM_Upsilon(benchmark::State& state) {
  const auto& basis = enumerate(Family::SP, static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& p : basis) benchmark::DoNotOptimize(upsilon(p));
}
BENCHMARK(BM_Upsilon)->DenseRange(2, 4);
BENCHMARK_MAIN();
