#include <benchmark/benchmark.h>

#include <memory>
#include <sstream>
#include <thread>

#include "cogclust/pipeline.hpp"
#include "synthetic.hpp"

namespace {

using namespace cogclust;

// 100 languages x 210 meanings, the size of a large ASJP family.
void BM_ClusterWordlist(benchmark::State& state) {
  std::stringstream wl_text, pmi_text;
  synthetic::write_wordlist(wl_text, 100, 210, 7);
  synthetic::write_pmi(pmi_text, 7);
  const auto wl = parse_wordlist(wl_text);
  const auto scorer = Scorer::pmi(std::make_shared<const PmiMatrix>(load_pmi(pmi_text)));
  const auto jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cluster_wordlist(wl, scorer, CrpConfig{}, {}, jobs));
}
BENCHMARK(BM_ClusterWordlist)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
