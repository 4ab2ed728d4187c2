#include <benchmark/benchmark.h>

#include <random>

#include "cogclust/crp.hpp"

namespace {

using namespace cogclust;

SimilarityMatrix random_similarity(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> val(0.0, 5.0);
  std::bernoulli_distribution zero(0.7);
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) v[i * n + j] = v[j * n + i] = zero(rng) ? 0.0 : val(rng);
  return SimilarityMatrix(n, v);
}

void BM_CrpAverage(benchmark::State& state) {
  const auto s = random_similarity(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(crp_cluster(s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CrpAverage)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_CrpSingle(benchmark::State& state) {
  const auto s = random_similarity(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(crp_cluster(s, {.linkage = Linkage::kSingle}));
}
BENCHMARK(BM_CrpSingle)->Arg(100)->Arg(400);

void BM_FlatThreshold(benchmark::State& state) {
  const auto s = random_similarity(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(flat_cluster_threshold(s, 1.0));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FlatThreshold)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNCubed);

}  // namespace
