#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cogclust/align.hpp"
#include "cogclust/partition.hpp"

namespace cogclust {

enum class Linkage { kAverage, kSingle };

struct CrpConfig {
  double alpha = 0.01;
  int max_scans = 3;
  Linkage linkage = Linkage::kAverage;
  // Visit words in a seeded random order (fixed across scans) instead of
  // index order.
  std::optional<std::uint64_t> shuffle_seed;

  void validate() const;
};

struct CrpResult {
  Partition partition;
  // Words whose set of co-members changed, one entry per scan performed.
  std::vector<std::size_t> reassignments;
  bool converged = false;

  int scans() const { return static_cast<int>(reassignments.size()); }
};

// Threshold-free clustering: starting from singletons, each word in turn
// leaves its cluster and joins the cluster with the highest linkage
// similarity, or opens a new one if that maximum is below alpha. Stops after
// the first scan without reassignments or after max_scans.
CrpResult crp_run(const SimilarityMatrix& s, const CrpConfig& config = {});

inline Partition crp_cluster(const SimilarityMatrix& s, const CrpConfig& config = {}) {
  return crp_run(s, config).partition;
}

// Agglomerative average-linkage baseline: merge the most similar pair of
// clusters while their average similarity is at least `threshold`.
Partition flat_cluster_threshold(const SimilarityMatrix& s, double threshold);

}  // namespace cogclust
