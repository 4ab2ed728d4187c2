#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cogclust/partition.hpp"

namespace cogclust {

struct BcubedScore {
  double precision = 0.0;
  double recall = 0.0;
  double f_score = 0.0;
};

double harmonic_mean(double p, double r);

// Item-level B-cubed precision and recall (each item counts itself), averaged
// over items, combined by harmonic mean. Throws ValidationError when the two
// partitions cover different numbers of items.
BcubedScore bcubed(const Partition& predicted, const Partition& gold);

// Sample Pearson correlation; nullopt when lengths differ, fewer than two
// points are given, or either side has zero variance.
std::optional<double> pearson(std::span<const double> x, std::span<const double> y);

using MeaningPartitions = std::vector<std::pair<std::string, Partition>>;

struct MeaningScore {
  std::string meaning;
  BcubedScore score;
  std::size_t predicted_k = 0;
  std::size_t true_k = 0;
  std::size_t items = 0;
};

struct EvalReport {
  std::vector<MeaningScore> per_meaning;
  // Arithmetic means of the per-meaning values.
  BcubedScore aggregate;
  std::optional<double> cluster_count_correlation;

  // Filled by the caller that knows the word list.
  std::size_t meanings_without_gold = 0;
  std::size_t synonyms_kept = 0;
};

// Report rows follow the order of `predictions`. Throws ValidationError on
// mismatched meaning keys or item counts.
EvalReport evaluate_dataset(const MeaningPartitions& predictions, const MeaningPartitions& gold);

struct ReportStyle {
  int decimals = 4;
};

// Human-readable table plus aggregate lines; correlation shown as r x 100.
void write_report_text(const EvalReport& report, std::ostream& sink, ReportStyle style = {});
// key=value lines; correlation as raw r.
void write_report_kv(const EvalReport& report, std::ostream& sink, ReportStyle style = {});

}  // namespace cogclust
