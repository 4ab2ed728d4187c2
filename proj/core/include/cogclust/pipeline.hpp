#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cogclust/align.hpp"
#include "cogclust/crp.hpp"
#include "cogclust/eval.hpp"
#include "cogclust/wordlist.hpp"

namespace cogclust {

struct ThresholdConfig {
  double threshold = 0.5;
};

using ClusterMethod = std::variant<CrpConfig, ThresholdConfig>;

struct MeaningClustering {
  std::string meaning;
  std::vector<WordForm> forms;
  Partition partition;
};

// Clusters every meaning of `wl` on `jobs` worker threads. Results come back
// in word-list meaning order regardless of scheduling.
std::vector<MeaningClustering> cluster_wordlist(const WordList& wl, const Scorer& scorer,
                                                const ClusterMethod& method,
                                                SimilarityOptions options = {},
                                                unsigned jobs = 1);

// Gold partition of one meaning's forms, labels numbered by first appearance.
// Throws ValidationError if any form lacks a gold class.
Partition gold_partition(std::span<const WordForm> forms);

// Copies gold classes from `gold` onto the forms of `wl`, matching on
// (language, meaning, transcription). Throws ValidationError for a form with
// no match.
WordList attach_gold(const WordList& wl, const WordList& gold);

// meaning<TAB>language<TAB>transcription<TAB>cluster_id, header included.
void write_partition_tsv(std::span<const MeaningClustering> clusterings, std::ostream& sink);

// Reads a partition TSV back into per-meaning partitions aligned with the
// forms of `wl`. Every form of a listed meaning must appear exactly once.
MeaningPartitions read_partition_tsv(std::istream& source, const WordList& wl);

// Builds an EvalReport over the meanings of `clusterings` that carry gold
// labels; meanings without gold are counted, not scored.
EvalReport evaluate_clusterings(const WordList& wl, const MeaningPartitions& predictions);

}  // namespace cogclust
