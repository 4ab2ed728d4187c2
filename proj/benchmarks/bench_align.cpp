#include <benchmark/benchmark.h>

#include <memory>
#include <random>
#include <sstream>

#include "cogclust/align.hpp"
#include "synthetic.hpp"

namespace {

using namespace cogclust;

std::vector<Segment> random_word(std::mt19937_64& rng, std::size_t len) {
  const auto& asjp = Alphabet::asjp();
  std::uniform_int_distribution<std::size_t> sym(0, asjp.size() - 1);
  std::vector<Segment> w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(asjp.segment_at(sym(rng)));
  return w;
}

std::shared_ptr<const PmiMatrix> random_matrix() {
  std::stringstream ss;
  synthetic::write_pmi(ss, 1);
  return std::make_shared<const PmiMatrix>(load_pmi(ss));
}

void BM_NwVanilla(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto len = static_cast<std::size_t>(state.range(0));
  const auto a = random_word(rng, len), b = random_word(rng, len);
  const auto scorer = Scorer::vanilla();
  for (auto _ : state) benchmark::DoNotOptimize(nw_score(a, b, scorer));
}
BENCHMARK(BM_NwVanilla)->Arg(4)->Arg(8)->Arg(16)->Arg(64);

void BM_NwPmi(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto len = static_cast<std::size_t>(state.range(0));
  const auto a = random_word(rng, len), b = random_word(rng, len);
  const auto scorer = Scorer::pmi(random_matrix());
  for (auto _ : state) benchmark::DoNotOptimize(nw_score(a, b, scorer));
}
BENCHMARK(BM_NwPmi)->Arg(4)->Arg(8)->Arg(16)->Arg(64);

void BM_SimilarityMatrix(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> len(3, 8);
  std::vector<WordForm> forms;
  for (int i = 0; i < state.range(0); ++i) forms.push_back({"L" + std::to_string(i), "M", random_word(rng, len(rng)), {}});
  const auto scorer = Scorer::pmi(random_matrix());
  for (auto _ : state) benchmark::DoNotOptimize(similarity_matrix(forms, scorer));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SimilarityMatrix)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNSquared);

}  // namespace
