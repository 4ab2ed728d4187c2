#pragma once

// Test-only reference implementations. Each one follows the textbook
// definition as literally as possible and shares no code with the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// Maximum over every global alignment of `a` and `b`, enumerated explicitly
// column by column. A column is a match (both advance), a deletion (gap in
// b) or an insertion (gap in a). A gap column opens a run unless the
// previous column is a gap column of the same kind.
class AlignmentEnumerator {
 public:
  using Sub = std::function<double(char, char)>;

  AlignmentEnumerator(std::string a, std::string b, Sub sub, double open, double extend)
      : a_(std::move(a)), b_(std::move(b)), sub_(std::move(sub)), open_(open), extend_(extend) {}

  double best() {
    best_ = -std::numeric_limits<double>::infinity();
    count_ = 0;
    walk(0, 0, Column::kNone, 0.0);
    return best_;
  }
  std::size_t alignments_seen() const { return count_; }

 private:
  enum class Column { kNone, kMatch, kDeletion, kInsertion };

  void walk(std::size_t i, std::size_t j, Column prev, double acc) {
    if (i == a_.size() && j == b_.size()) {
      ++count_;
      best_ = std::max(best_, acc);
      return;
    }
    if (i < a_.size() && j < b_.size()) walk(i + 1, j + 1, Column::kMatch, acc + sub_(a_[i], b_[j]));
    if (i < a_.size()) walk(i + 1, j, Column::kDeletion, acc + (prev == Column::kDeletion ? extend_ : open_));
    if (j < b_.size()) walk(i, j + 1, Column::kInsertion, acc + (prev == Column::kInsertion ? extend_ : open_));
  }

  std::string a_, b_;
  Sub sub_;
  double open_, extend_;
  double best_ = 0.0;
  std::size_t count_ = 0;
};

inline double enumerate_alignments(const std::string& a, const std::string& b, const AlignmentEnumerator::Sub& sub,
                                   double open, double extend) {
  return AlignmentEnumerator(a, b, sub, open, extend).best();
}

inline AlignmentEnumerator::Sub vanilla_sub(double match = 1.0, double mismatch = -1.0) {
  return [=](char x, char y) { return x == y ? match : mismatch; };
}

struct Bcubed {
  double precision, recall, f;
};

// Per-item loop straight from the definition: for each item, count items
// sharing both its predicted and gold cluster.
inline Bcubed bcubed(const std::vector<std::size_t>& pred, const std::vector<std::size_t>& gold) {
  const std::size_t n = pred.size();
  double p = 0.0, r = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double both = 0, in_pred = 0, in_gold = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const bool sp = pred[j] == pred[i];
      const bool sg = gold[j] == gold[i];
      in_pred += sp;
      in_gold += sg;
      both += sp && sg;
    }
    p += both / in_pred;
    r += both / in_gold;
  }
  p /= static_cast<double>(n);
  r /= static_cast<double>(n);
  return {p, r, (p + r) > 0 ? 2 * p * r / (p + r) : 0.0};
}

// Relative-frequency counting of co-aligned segments with no smoothing.
// Returns log(p(x,y) / (q(x) q(y))) for the unordered pair {x, y}.
inline double pmi_by_counting(const std::vector<std::pair<std::string, std::string>>& corpus, char x, char y) {
  double positions = 0, joint = 0, tokens = 0, count_x = 0, count_y = 0;
  for (const auto& [top, bottom] : corpus) {
    for (std::size_t k = 0; k < top.size(); ++k) {
      if (top[k] == '-' || bottom[k] == '-') continue;
      positions += 1;
      if ((top[k] == x && bottom[k] == y) || (top[k] == y && bottom[k] == x)) joint += 1;
      for (char c : {top[k], bottom[k]}) {
        tokens += 1;
        if (c == x) count_x += 1;
        if (c == y) count_y += 1;
      }
    }
  }
  if (joint == 0) return -std::numeric_limits<double>::infinity();
  const double p = joint / positions;
  const double qx = count_x / tokens;
  const double qy = count_y / tokens;
  return std::log(p / (qx * qy));
}

// The clustering loop written with explicit cluster sets: a map from label
// to member set, emptied clusters erased, new clusters taking the smallest
// unused label, ties going to the smallest label.
struct CrpTrace {
  std::vector<std::size_t> labels;
  std::vector<std::size_t> changes_per_scan;
};

inline CrpTrace crp_reference(const std::vector<std::vector<double>>& s, double alpha, int max_scans, bool single) {
  const std::size_t n = s.size();
  std::map<std::size_t, std::set<std::size_t>> clusters;
  std::vector<std::size_t> label(n);
  for (std::size_t w = 0; w < n; ++w) {
    clusters[w] = {w};
    label[w] = w;
  }
  CrpTrace trace;
  for (int scan = 0; scan < max_scans; ++scan) {
    std::size_t changes = 0;
    for (std::size_t w = 0; w < n; ++w) {
      std::set<std::size_t> before = clusters[label[w]];
      before.erase(w);
      clusters[label[w]].erase(w);
      if (clusters[label[w]].empty()) clusters.erase(label[w]);

      double best = -1.0;
      std::size_t best_label = 0;
      for (const auto& [k, members] : clusters) {
        double agg = 0.0;
        for (auto m : members) agg = single ? std::max(agg, s[w][m]) : agg + s[w][m];
        if (!single) agg /= static_cast<double>(members.size());
        if (agg > best) {
          best = agg;
          best_label = k;
        }
      }
      std::size_t target;
      if (clusters.empty() || best < alpha) {
        target = 0;
        while (clusters.count(target)) ++target;
      } else {
        target = best_label;
      }
      std::set<std::size_t> after = clusters.count(target) ? clusters[target] : std::set<std::size_t>{};
      clusters[target].insert(w);
      label[w] = target;
      if (after != before) ++changes;
    }
    trace.changes_per_scan.push_back(changes);
    if (changes == 0) break;
  }
  trace.labels = label;
  return trace;
}

inline bool same_set_partition(const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if ((x[i] == x[j]) != (y[i] == y[j])) return false;
  return true;
}

inline std::vector<std::size_t> random_labels(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> k_dist(1, std::max<std::size_t>(1, n));
  const std::size_t k = k_dist(rng);
  std::uniform_int_distribution<std::size_t> label(0, k - 1);
  std::vector<std::size_t> out(n);
  for (auto& l : out) l = label(rng);
  return out;
}

inline std::string random_word(std::mt19937_64& rng, const std::string& alphabet, std::size_t min_len,
                               std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<std::size_t> sym(0, alphabet.size() - 1);
  std::string w(len(rng), ' ');
  for (auto& c : w) c = alphabet[sym(rng)];
  return w;
}

}  // namespace oracle
