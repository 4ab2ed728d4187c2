#include "cogclust/crp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "cogclust/error.hpp"

namespace cogclust {

namespace {

// Averages of equal similarities over clusters of different sizes can differ
// in the last bits; such scores count as tied.
constexpr double kTieTolerance = 1e-12;

bool clearly_greater(double a, double b) { return a - b > kTieTolerance * std::max(std::fabs(a), std::fabs(b)); }

}  // namespace

void CrpConfig::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ValidationError("alpha must be a finite value > 0");
  if (max_scans < 1) throw ValidationError("max_scans must be >= 1");
}

CrpResult crp_run(const SimilarityMatrix& s, const CrpConfig& config) {
  config.validate();
  const std::size_t n = s.size();
  CrpResult result;
  if (n == 0) {
    result.converged = true;
    return result;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (config.shuffle_seed) {
    std::mt19937_64 rng(*config.shuffle_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }

  // Word n starts alone in cluster n. Labels stay below n, so flat arrays
  // indexed by label are enough.
  std::vector<std::size_t> label(n);
  std::iota(label.begin(), label.end(), std::size_t{0});
  std::vector<std::size_t> size(n, 1);

  std::vector<double> agg(n);
  for (int scan = 0; scan < config.max_scans; ++scan) {
    std::size_t changed = 0;
    for (const std::size_t w : order) {
      const std::size_t old = label[w];
      const bool was_alone = size[old] == 1;
      --size[old];

      std::fill(agg.begin(), agg.end(), config.linkage == Linkage::kSingle ? -1.0 : 0.0);
      const auto row = s.row(w);
      for (std::size_t m = 0; m < n; ++m) {
        if (m == w) continue;
        const std::size_t k = label[m];
        if (config.linkage == Linkage::kSingle) agg[k] = std::max(agg[k], row[m]);
        else agg[k] += row[m];
      }

      // Lowest label wins ties.
      std::size_t best = n;
      double best_score = -std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < n; ++k) {
        if (size[k] == 0) continue;
        const double score = config.linkage == Linkage::kSingle ? agg[k] : agg[k] / static_cast<double>(size[k]);
        if (best == n || clearly_greater(score, best_score)) {
          best_score = score;
          best = k;
        }
      }

      std::size_t target;
      bool moved;
      if (best == n || best_score < config.alpha) {
        target = 0;
        while (size[target] != 0) ++target;
        moved = !was_alone;
      } else {
        target = best;
        moved = was_alone || target != old;
      }
      label[w] = target;
      ++size[target];
      if (moved) ++changed;
    }
    result.reassignments.push_back(changed);
    if (changed == 0) {
      result.converged = true;
      break;
    }
  }
  result.partition = Partition::canonical(label);
  return result;
}

Partition flat_cluster_threshold(const SimilarityMatrix& s, double threshold) {
  const std::size_t n = s.size();
  if (n == 0) return Partition{};

  // sum[a][b]: total similarity between clusters a and b. Cluster a is
  // represented by its lowest member; merged clusters are retired.
  std::vector<double> sum(s.values());
  std::vector<std::size_t> size(n, 1);
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> label(n);
  std::iota(label.begin(), label.end(), std::size_t{0});

  for (std::size_t clusters = n; clusters > 1; --clusters) {
    std::size_t best_a = n, best_b = n;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < n; ++a) {
      if (!alive[a]) continue;
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!alive[b]) continue;
        const double avg = sum[a * n + b] / static_cast<double>(size[a] * size[b]);
        if (avg > best) {
          best = avg;
          best_a = a;
          best_b = b;
        }
      }
    }
    if (best < threshold) break;

    for (std::size_t c = 0; c < n; ++c) {
      if (!alive[c] || c == best_a || c == best_b) continue;
      sum[best_a * n + c] += sum[best_b * n + c];
      sum[c * n + best_a] = sum[best_a * n + c];
    }
    size[best_a] += size[best_b];
    alive[best_b] = false;
    for (auto& l : label)
      if (l == best_b) l = best_a;
  }
  return Partition::canonical(label);
}

}  // namespace cogclust
