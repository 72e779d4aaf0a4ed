#include <benchmark/benchmark.h>

#include "cardrep/characters.hpp"
#include "cardrep/parabolic.hpp"
#include "cardrep/plancherel_chain.hpp"
#include "cardrep/rsk.hpp"
#include "cardrep/shuffles.hpp"

using namespace cardrep;

static void BM_CharacterTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(CharacterTable::build(n));
}
BENCHMARK(BM_CharacterTable)->DenseRange(6, 12, 3)->Unit(benchmark::kMillisecond);

static void BM_TransitionMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GroupData g = GroupData::symmetric(CharacterTable::build(n));
  const auto crv = ratio_vector_for(point_stabilizer(n));
  for (auto _ : state) benchmark::DoNotOptimize(transition_matrix<Rational>(g, crv));
}
BENCHMARK(BM_TransitionMatrix)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_Convolution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto m = measure_of<double>(ShuffleSpec::riffle_k_cut(n, n / 2));
  for (auto _ : state) benchmark::DoNotOptimize(convolve(m, m));
}
BENCHMARK(BM_Convolution)->DenseRange(5, 7, 1)->Unit(benchmark::kMillisecond);

static void BM_RskShape(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(7);
  ShuffleSampler sampler(ShuffleSpec::riffle_k_cut(n, n / 2));
  Permutation g = Permutation::identity(n);
  for (int i = 0; i < 50; ++i) g = sampler(rng) * g;
  for (auto _ : state) benchmark::DoNotOptimize(rsk_shape(g));
}
BENCHMARK(BM_RskShape)->RangeMultiplier(2)->Range(16, 64);

static void BM_Sampler(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(7);
  ShuffleSampler sampler(ShuffleSpec::riffle_k_cut(n, n / 2));
  for (auto _ : state) benchmark::DoNotOptimize(sampler(rng));
}
BENCHMARK(BM_Sampler)->RangeMultiplier(2)->Range(16, 64);
BENCHMARK_MAIN();
