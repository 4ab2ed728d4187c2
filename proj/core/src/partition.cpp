#include "cogclust/partition.hpp"

#include <algorithm>
#include <unordered_map>

#include "cogclust/error.hpp"

namespace cogclust {

Partition::Partition(std::vector<std::size_t> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) return;
  k_ = *std::max_element(labels_.begin(), labels_.end()) + 1;
  if (k_ > labels_.size()) throw ValidationError("partition labels are not contiguous");
  std::vector<bool> used(k_, false);
  for (auto l : labels_) used[l] = true;
  if (std::find(used.begin(), used.end(), false) != used.end())
    throw ValidationError("partition labels are not contiguous");
}

Partition Partition::canonical(std::span<const std::size_t> labels) {
  std::unordered_map<std::size_t, std::size_t> renumber;
  std::vector<std::size_t> out;
  out.reserve(labels.size());
  for (auto l : labels) out.push_back(renumber.try_emplace(l, renumber.size()).first->second);
  return Partition(std::move(out));
}

Partition Partition::singletons(std::size_t n) {
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = i;
  return Partition(std::move(labels));
}

Partition Partition::single_cluster(std::size_t n) { return Partition(std::vector<std::size_t>(n, 0)); }

std::vector<std::size_t> Partition::cluster_sizes() const {
  std::vector<std::size_t> sizes(k_, 0);
  for (auto l : labels_) ++sizes[l];
  return sizes;
}

bool Partition::same_clustering(const Partition& other) const {
  return canonical(labels_).labels_ == canonical(other.labels_).labels_;
}

}  // namespace cogclust
