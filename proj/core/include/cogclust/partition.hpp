#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace cogclust {

// Assignment of items 0..N-1 to dense cluster labels 0..K-1.
class Partition {
 public:
  Partition() = default;
  // Throws ValidationError if the labels are not exactly 0..K-1.
  explicit Partition(std::vector<std::size_t> labels);

  // Renumbers arbitrary labels densely in order of first appearance.
  static Partition canonical(std::span<const std::size_t> labels);
  static Partition singletons(std::size_t n);
  static Partition single_cluster(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  std::size_t cluster_count() const { return k_; }
  std::size_t label(std::size_t item) const { return labels_[item]; }
  const std::vector<std::size_t>& labels() const { return labels_; }
  std::vector<std::size_t> cluster_sizes() const;

  // Equality as set partitions; label values are irrelevant.
  bool same_clustering(const Partition& other) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> labels_;
  std::size_t k_ = 0;
};

}  // namespace cogclust
