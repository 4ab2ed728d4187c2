#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cogclust/alphabet.hpp"

namespace cogclust {

// Dense symmetric segment-pair score table (log scale).
class PmiMatrix {
 public:
  // `scores` is row-major alphabet.size() squared. Throws ValidationError if
  // the table is not square or not symmetric.
  PmiMatrix(Alphabet alphabet, std::vector<double> scores);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return alphabet_.size(); }

  double score(std::size_t i, std::size_t j) const { return scores_[i * size() + j]; }
  // Throws ValidationError if either symbol is outside the alphabet.
  double score(char a, char b) const;
  double score(Segment a, Segment b) const { return score(a.symbol(), b.symbol()); }

  bool covers(const Alphabet& other) const;
  const std::vector<double>& scores() const { return scores_; }

  friend bool operator==(const PmiMatrix&, const PmiMatrix&) = default;

 private:
  Alphabet alphabet_;
  std::vector<double> scores_;
};

// File format:
//   alphabet<TAB>a b c ...
//   a<TAB>a<TAB>score
//   a<TAB>b<TAB>score
// One line per unordered pair; a repeated pair must repeat its value.
PmiMatrix load_pmi(std::istream& source);
PmiMatrix load_pmi_file(const std::string& path);
void save_pmi(const PmiMatrix& m, std::ostream& sink);

// Two equal-length rows of an alignment, '-' marking gaps.
struct AlignedPair {
  std::string top;
  std::string bottom;
};

struct PmiEstimate {
  PmiMatrix matrix;
  std::size_t positions = 0;         // non-gap columns counted
  std::size_t unobserved_pairs = 0;  // pairs scored -inf (smoothing 0 only)
};

inline constexpr double kDefaultSmoothing = 0.1;

// Single pass of pointwise mutual information over aligned columns.
// Columns with a gap on either side are ignored. Joint counts pool (i,j) and
// (j,i); `smoothing` is a pseudo-count added to every unordered pair, and each
// symbol's marginal receives the token mass those pseudo-columns carry.
PmiEstimate estimate_pmi(std::span<const AlignedPair> aligned_pairs, const Alphabet& alphabet,
                         double smoothing = kDefaultSmoothing);

// TSV of aligned pairs; optional header `aligned_a<TAB>aligned_b`.
std::vector<AlignedPair> parse_aligned_pairs(std::istream& source);

}  // namespace cogclust
