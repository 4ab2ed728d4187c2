#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cogclust/pmi.hpp"
#include "cogclust/wordlist.hpp"

namespace cogclust {

// Affine gap scores. The first symbol of a gap run costs `open`, every
// further symbol in the run costs `extend`.
struct GapParams {
  double open = -1.0;
  double extend = -0.5;

  // Throws ValidationError unless open <= 0, extend <= 0 and
  // |extend| <= |open|.
  void validate() const;
};

struct VanillaScores {
  double match = 1.0;
  double mismatch = -1.0;
};

class Scorer {
 public:
  static Scorer vanilla(VanillaScores scores = {}, GapParams gaps = {});
  static Scorer pmi(std::shared_ptr<const PmiMatrix> matrix, GapParams gaps = {});

  const GapParams& gaps() const { return gaps_; }
  bool is_pmi() const { return std::holds_alternative<std::shared_ptr<const PmiMatrix>>(variant_); }
  const VanillaScores& vanilla_scores() const { return std::get<VanillaScores>(variant_); }
  const PmiMatrix& matrix() const { return *std::get<std::shared_ptr<const PmiMatrix>>(variant_); }

 private:
  Scorer(std::variant<VanillaScores, std::shared_ptr<const PmiMatrix>> v, GapParams gaps)
      : variant_(std::move(v)), gaps_(gaps) {}

  std::variant<VanillaScores, std::shared_ptr<const PmiMatrix>> variant_;
  GapParams gaps_;
};

// Best global alignment score (three-state affine-gap dynamic program).
// Empty inputs are accepted. Throws ValidationError when a PMI scorer meets a
// symbol outside its matrix.
double nw_score(std::span<const Segment> a, std::span<const Segment> b, const Scorer& scorer);

struct SimilarityOptions {
  // Divide each raw score by the mean of the two self-scores before the
  // ReLU clamp (0 when that mean is not positive).
  bool normalize = false;
};

// Symmetric, non-negative N x N word similarity matrix.
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;
  // Throws ValidationError unless `values` is n*n, finite, symmetric and
  // non-negative. `labels` is either empty or n long.
  SimilarityMatrix(std::size_t n, std::vector<double> values, std::vector<std::string> labels = {});

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const { return {values_.data() + i * n_, n_}; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<std::string>& labels() const { return labels_; }

  SimilarityMatrix scaled(double factor) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
  std::vector<std::string> labels_;
};

// values[i][j] = max(0, nw_score(forms[i], forms[j])), diagonal included.
// Throws DegenerateInputError for an empty sequence of forms.
SimilarityMatrix similarity_matrix(std::span<const WordForm> forms, const Scorer& scorer,
                                   SimilarityOptions options = {});

// Debug dump: header row and first column hold the transcriptions.
void write_similarity_tsv(const SimilarityMatrix& s, std::ostream& sink);

}  // namespace cogclust
