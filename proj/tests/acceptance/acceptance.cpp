// Acceptance suite: one PASS/FAIL line per criterion.
//
// usage: cogclust_acceptance <path-to-cogclust-binary> <test-data-dir>
//
// Optional: COGCLUST_DATASETS (colon-separated word-list TSVs with gold
// classes) and COGCLUST_PMI (ASJP PMI matrix) enable the reproduction run.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cogclust/align.hpp"
#include "cogclust/crp.hpp"
#include "cogclust/eval.hpp"
#include "cogclust/pmi.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

namespace fs = std::filesystem;
using namespace cogclust;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v, int digits = 4) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

int shell(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WEXITSTATUS(status);
}

SimilarityMatrix from_rows(const std::vector<std::vector<double>>& rows) {
  std::vector<double> v;
  for (const auto& r : rows) v.insert(v.end(), r.begin(), r.end());
  return SimilarityMatrix(rows.size(), v);
}

std::vector<std::vector<double>> random_rows(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> val(0.0, 5.0);
  std::bernoulli_distribution zero(0.5);
  std::vector<std::vector<double>> s(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    s[i][i] = val(rng);
    for (std::size_t j = i + 1; j < n; ++j) s[i][j] = s[j][i] = zero(rng) ? 0.0 : val(rng);
  }
  return s;
}

// 1
Verdict alignment_oracle() {
  const auto t0 = Clock::now();
  const Alphabet abcd("abcd");
  std::mt19937_64 rng(20160801);
  std::uniform_real_distribution<double> open_dist(-3.0, 0.0), frac(0.0, 1.0), sub(-2.0, 2.0);
  std::size_t mismatches = 0;
  constexpr int kPairs = 10000;
  for (int t = 0; t < kPairs; ++t) {
    const auto a = oracle::random_word(rng, "abcd", 0, 5);
    const auto b = oracle::random_word(rng, "abcd", 0, 5);
    const double open = open_dist(rng);
    const GapParams gaps{open, open * frac(rng)};
    double got, want;
    if (t % 2 == 0) {
      got = nw_score(abcd.segments(a), abcd.segments(b), Scorer::vanilla({}, gaps));
      want = oracle::enumerate_alignments(a, b, oracle::vanilla_sub(), gaps.open, gaps.extend);
    } else {
      std::vector<double> table(16);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j) table[i * 4 + j] = table[j * 4 + i] = sub(rng);
      const auto m = std::make_shared<const PmiMatrix>(abcd, table);
      got = nw_score(abcd.segments(a), abcd.segments(b), Scorer::pmi(m, gaps));
      want = oracle::enumerate_alignments(a, b, [&](char x, char y) { return m->score(x, y); }, gaps.open, gaps.extend);
    }
    if (got != want) ++mismatches;
  }
  const double secs = seconds_since(t0);
  return {mismatches == 0 && secs < 30.0,
          std::to_string(kPairs) + " pairs, " + std::to_string(mismatches) + " mismatches, " + fmt(secs, 3) + " s (< 30 s)"};
}

// 2
Verdict bcubed_oracle() {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::size_t> n_dist(1, 8);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = n_dist(rng);
    const auto pl = oracle::random_labels(rng, n);
    const auto gl = oracle::random_labels(rng, n);
    const auto got = bcubed(Partition::canonical(pl), Partition::canonical(gl));
    const auto want = oracle::bcubed(pl, gl);
    worst = std::max({worst, std::fabs(got.precision - want.precision), std::fabs(got.recall - want.recall),
                      std::fabs(got.f_score - want.f)});
  }
  const Partition gold({0, 0, 1});
  const double f_split = bcubed(Partition::singletons(3), gold).f_score;
  const double f_lump = bcubed(Partition::single_cluster(3), gold).f_score;
  const bool fixtures = f_split == 0.8 && f_lump == 10.0 / 14.0;
  return {worst <= 1e-12 && fixtures, "1000 pairs, max |diff| " + fmt(worst, 3) + " (<= 1e-12); fixtures F=" +
                                          fmt(f_split, 17) + ", " + fmt(f_lump, 17)};
}

// 3
Verdict crp_recovery() {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> k_dist(1, 8), size_dist(2, 10);
  std::uniform_real_distribution<double> within(1.0, 5.0);
  int recovered = 0;
  for (int t = 0; t < 100; ++t) {
    std::vector<std::size_t> block;
    std::vector<double> level;
    const std::size_t k = k_dist(rng);
    for (std::size_t b = 0; b < k; ++b) {
      block.insert(block.end(), size_dist(rng), b);
      level.push_back(within(rng));
    }
    std::shuffle(block.begin(), block.end(), rng);  // interleave blocks
    const std::size_t n = block.size();
    std::vector<std::vector<double>> s(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (block[i] == block[j]) s[i][j] = level[block[i]];
    const auto p = crp_cluster(from_rows(s), {.alpha = 0.01});
    const auto truth = Partition::canonical(block);
    if (p.same_clustering(truth) && bcubed(p, truth).f_score == 1.0) ++recovered;
  }
  return {recovered == 100, std::to_string(recovered) + "/100 block partitions recovered with F = 1.0"};
}

// 4
Verdict crp_fixtures() {
  const std::vector<std::vector<double>> three{{0, 5, 0}, {5, 0, 0}, {0, 0, 0}};
  std::vector<std::vector<double>> blocks(6, std::vector<double>(6, 0.0));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      if (i / 3 == j / 3) blocks[i][j] = 3.0;

  bool ok = true;
  std::string detail;
  const auto check = [&](const std::string& name, const std::vector<std::vector<double>>& rows,
                         const std::vector<std::size_t>& expected) {
    const auto r = crp_run(from_rows(rows), {.alpha = 0.01, .max_scans = 3});
    // one more scan from the same start must change nothing if scan <= 3 converged
    const auto longer = crp_run(from_rows(rows), {.alpha = 0.01, .max_scans = 4});
    const bool exact = r.partition.labels() == expected;
    const bool converged = r.converged && r.scans() <= 3 && r.reassignments.back() == 0 && longer.scans() == r.scans();
    ok = ok && exact && converged;
    std::string scans;
    for (auto c : r.reassignments) scans += (scans.empty() ? "" : ",") + std::to_string(c);
    detail += name + (exact ? " exact" : " WRONG") + " (reassignments per scan: " + scans + ") ";
  };
  check("N=3", three, {0, 0, 1});
  check("two blocks of 3", blocks, {0, 0, 0, 1, 1, 1});
  return {ok, detail};
}

// 5
Verdict crp_extremes() {
  bool zeros_ok = true;
  for (std::size_t n : {1u, 2u, 5u, 17u, 40u})
    zeros_ok = zeros_ok && crp_cluster(SimilarityMatrix(n, std::vector<double>(n * n, 0.0))).cluster_count() == n;

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> n_dist(2, 20);
  std::uniform_real_distribution<double> alpha_dist(0.01, 3.0);
  int covariant = 0;
  for (int t = 0; t < 100; ++t) {
    const auto s = from_rows(random_rows(rng, n_dist(rng)));
    const CrpConfig base{.alpha = alpha_dist(rng), .linkage = t % 2 ? Linkage::kSingle : Linkage::kAverage};
    const auto p = crp_cluster(s, base);
    bool all = true;
    for (double c : {0.5, 2.0, 10.0}) {
      CrpConfig scaled = base;
      scaled.alpha *= c;
      all = all && crp_cluster(s.scaled(c), scaled).same_clustering(p);
    }
    covariant += all;
  }
  return {zeros_ok && covariant == 100, std::string("all-zero S -> K = N: ") + (zeros_ok ? "yes" : "NO") +
                                            "; scale covariance " + std::to_string(covariant) + "/100"};
}

// 6
Verdict pmi_estimator() {
  // Independence corpora over {a,b,c}: all count vectors with
  // 4 * positions * count(a,b) == tokens(a) * tokens(b).
  const Alphabet abc("abc");
  const std::vector<std::pair<char, char>> pairs{{'a', 'a'}, {'a', 'b'}, {'a', 'c'}, {'b', 'b'}, {'b', 'c'}, {'c', 'c'}};
  std::size_t corpora = 0;
  double worst_indep = 0.0;
  std::vector<int> c(6, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == c.size()) {
      if (c[1] == 0) return;
      long positions = 0, tok_a = 0, tok_b = 0;
      std::vector<AlignedPair> corpus;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        positions += c[i];
        for (int r = 0; r < c[i]; ++r) corpus.push_back({std::string(1, pairs[i].first), std::string(1, pairs[i].second)});
      }
      tok_a = 2L * c[0] + c[1] + c[2];
      tok_b = c[1] + 2L * c[3] + c[4];
      if (4 * positions * c[1] != tok_a * tok_b) return;
      ++corpora;
      worst_indep = std::max(worst_indep, std::fabs(estimate_pmi(corpus, abc, 0.0).matrix.score('a', 'b')));
      return;
    }
    for (int v = 0; v <= 4; ++v) {
      c[k] = v;
      rec(k + 1);
    }
  };
  rec(0);

  std::mt19937_64 rng(6);
  double worst_oracle = 0.0;
  for (int t = 0; t < 100; ++t) {
    std::vector<std::pair<std::string, std::string>> rows;
    std::vector<AlignedPair> corpus;
    std::uniform_int_distribution<int> n_rows(1, 8);
    std::bernoulli_distribution gap(0.1);
    for (int r = n_rows(rng); r > 0; --r) {
      auto top = oracle::random_word(rng, "abcde", 1, 7);
      auto bottom = oracle::random_word(rng, "abcde", top.size(), top.size());
      for (auto& ch : bottom)
        if (gap(rng)) ch = '-';
      rows.emplace_back(top, bottom);
    }
    rows.emplace_back("a", "a");  // never degenerate
    for (const auto& [x, y] : rows) corpus.push_back({x, y});
    const auto est = estimate_pmi(corpus, Alphabet("abcde"), 0.0);
    for (char x : std::string("abcde"))
      for (char y : std::string("abcde")) {
        const double want = oracle::pmi_by_counting(rows, x, y);
        const double got = est.matrix.score(x, y);
        if (std::isinf(want)) worst_oracle = std::max(worst_oracle, got == want ? 0.0 : INFINITY);
        else worst_oracle = std::max(worst_oracle, std::fabs(got - want));
      }
  }
  return {corpora > 0 && worst_indep <= 1e-12 && worst_oracle <= 1e-12,
          std::to_string(corpora) + " independence corpora, max |PMI| " + fmt(worst_indep, 3) +
              "; 100 random corpora, max |diff| " + fmt(worst_oracle, 3) + " (<= 1e-12)"};
}

struct Env {
  std::string binary;
  fs::path data_dir;
  fs::path work;
};

// 7
Verdict runtime(const Env& env) {
  const auto wl = env.work / "synthetic_100x210.tsv";
  const auto pmi = env.work / "synthetic.pmi";
  {
    std::ofstream out(wl, std::ios::binary);
    synthetic::write_wordlist(out, 100, 210, 2017);
    std::ofstream m(pmi, std::ios::binary);
    synthetic::write_pmi(m, 2017);
  }
  const auto t0 = Clock::now();
  const int code = shell(quote(env.binary) + " cluster --scorer pmi --pmi-matrix " + quote(pmi.string()) + " --input " +
                         quote(wl.string()) + " --out " + quote((env.work / "synthetic.part.tsv").string()));
  const double secs = seconds_since(t0);
  return {code == 0 && secs < 120.0, "100 languages x 210 meanings, exit " + std::to_string(code) + ", " + fmt(secs, 3) +
                                         " s (< 120 s)"};
}

std::optional<double> read_kv(const fs::path& report, const std::string& key) {
  std::ifstream in(report);
  std::string line;
  while (std::getline(in, line))
    if (line.starts_with(key + "=")) {
      const auto v = line.substr(key.size() + 1);
      if (v == "undefined") return std::nullopt;
      return std::stod(v);
    }
  return std::nullopt;
}

// 8
Verdict reproduction(const Env& env) {
  const char* datasets = std::getenv("COGCLUST_DATASETS");
  const char* matrix = std::getenv("COGCLUST_PMI");
  std::string detail;
  bool ok = true;
  if (datasets && *datasets && matrix && *matrix) {
    std::stringstream list(datasets);
    std::string path;
    int i = 0;
    while (std::getline(list, path, ':')) {
      if (path.empty()) continue;
      const auto report = env.work / ("dataset" + std::to_string(i++) + ".kv");
      const int code = shell(quote(env.binary) + " evaluate --scorer pmi --pmi-matrix " + quote(matrix) + " --input " +
                             quote(path) + " --report-format kv --report " + quote(report.string()));
      const auto f = read_kv(report, "f_score");
      ok = ok && code == 0 && f.has_value();
      detail += fs::path(path).filename().string() + ": " + (f ? "F=" + fmt(100 * *f, 4) : "exit " + std::to_string(code)) + "; ";
    }
  } else {
    detail = "no external datasets supplied (COGCLUST_DATASETS/COGCLUST_PMI); end-to-end on bundled data: ";
    const auto report = env.work / "sample.kv";
    const int code = shell(quote(env.binary) + " evaluate --input " + quote((env.data_dir / "sample.tsv").string()) +
                           " --report-format kv --report " + quote(report.string()));
    const auto f = read_kv(report, "f_score");
    ok = code == 0 && f.has_value();
    detail += "sample word list F=" + (f ? fmt(100 * *f, 4) : std::string("n/a"));

    const auto syn_report = env.work / "synthetic.kv";
    const int code2 = shell(quote(env.binary) + " evaluate --scorer pmi --pmi-matrix " +
                            quote((env.work / "synthetic.pmi").string()) + " --input " +
                            quote((env.work / "synthetic_100x210.tsv").string()) + " --report-format kv --report " +
                            quote(syn_report.string()));
    const auto f2 = read_kv(syn_report, "f_score");
    const auto r2 = read_kv(syn_report, "cluster_count_correlation");
    ok = ok && code2 == 0 && f2.has_value();
    detail += ", synthetic 100x210 F=" + (f2 ? fmt(100 * *f2, 4) : std::string("n/a")) +
              " r=" + (r2 ? fmt(100 * *r2, 4) : std::string("undefined"));
  }
  return {ok, detail + " (sample figures are reported, not gated)"};
}

// 9
Verdict determinism(const Env& env) {
  const auto input = (env.work / "synthetic_100x210.tsv").string();
  const auto pmi = (env.work / "synthetic.pmi").string();
  bool identical = true;
  for (int run = 0; run < 2; ++run) {
    const auto tag = std::to_string(run);
    const int code = shell(quote(env.binary) + " evaluate --scorer pmi --pmi-matrix " + quote(pmi) + " --input " +
                           quote(input) + " --jobs " + (run == 0 ? "1" : "4") + " --out " +
                           quote((env.work / ("det" + tag + ".tsv")).string()) + " --report " +
                           quote((env.work / ("det" + tag + ".txt")).string()));
    identical = identical && code == 0;
  }
  identical = identical && slurp(env.work / "det0.tsv") == slurp(env.work / "det1.tsv") &&
              slurp(env.work / "det0.txt") == slurp(env.work / "det1.txt") && !slurp(env.work / "det0.tsv").empty();
  return {identical, std::string("partition and report files ") + (identical ? "byte-identical" : "DIFFER") +
                         " across two runs (1 and 4 workers)"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: " << argv[0] << " <cogclust-binary> <test-data-dir>\n";
    return 2;
  }
  Env env{argv[1], argv[2], fs::temp_directory_path() / ("cogclust-acceptance-" + std::to_string(std::random_device{}()))};
  fs::create_directories(env.work);

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"1 alignment oracle equivalence", alignment_oracle},
      {"2 B-cubed oracle equivalence", bcubed_oracle},
      {"3 CRP block recovery", crp_recovery},
      {"4 CRP hand-traced fixtures", crp_fixtures},
      {"5 CRP extremes and scale covariance", crp_extremes},
      {"6 PMI estimator", pmi_estimator},
      {"7 runtime, 100 languages x 210 meanings", [&] { return runtime(env); }},
      {"8 conditional reproduction", [&] { return reproduction(env); }},
      {"9 CLI determinism", [&] { return determinism(env); }},
  };

  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += !v.pass;
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << v.detail << std::endl;
  }
  fs::remove_all(env.work);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
