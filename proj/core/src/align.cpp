#include "cogclust/align.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "cogclust/error.hpp"

namespace cogclust {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Three-state affine-gap global alignment in linear space.
//   match[i][j]  a_i aligned to b_j
//   del[i][j]    a_i aligned to a gap
//   ins[i][j]    b_j aligned to a gap
template <typename Sub>
double affine_global(std::size_t len_a, std::size_t len_b, const GapParams& gaps, Sub&& sub) {
  const double open = gaps.open;
  const double extend = gaps.extend;
  // Gap runs are accumulated one symbol at a time, so every cell holds the
  // left-to-right sum along its best path.
  const auto gap_run = [&](std::size_t len) {
    double g = open;
    for (std::size_t k = 1; k < len; ++k) g += extend;
    return g;
  };
  if (len_a == 0 && len_b == 0) return 0.0;
  if (len_a == 0) return gap_run(len_b);
  if (len_b == 0) return gap_run(len_a);

  std::vector<double> match(len_b + 1), del(len_b + 1), ins(len_b + 1);
  match[0] = 0.0;
  del[0] = ins[0] = kNegInf;
  for (std::size_t j = 1; j <= len_b; ++j) {
    match[j] = del[j] = kNegInf;
    ins[j] = j == 1 ? open : ins[j - 1] + extend;
  }

  for (std::size_t i = 1; i <= len_a; ++i) {
    double diag_m = match[0], diag_d = del[0], diag_i = ins[0];
    match[0] = kNegInf;
    ins[0] = kNegInf;
    del[0] = i == 1 ? open : del[0] + extend;
    for (std::size_t j = 1; j <= len_b; ++j) {
      const double up_m = match[j], up_d = del[j], up_i = ins[j];
      const double m = sub(i - 1, j - 1) + std::max({diag_m, diag_d, diag_i});
      const double d = std::max({up_m + open, up_d + extend, up_i + open});
      const double in = std::max({match[j - 1] + open, ins[j - 1] + extend, del[j - 1] + open});
      diag_m = up_m;
      diag_d = up_d;
      diag_i = up_i;
      match[j] = m;
      del[j] = d;
      ins[j] = in;
    }
  }
  return std::max({match[len_b], del[len_b], ins[len_b]});
}

std::vector<std::size_t> encode(std::span<const Segment> word, const PmiMatrix& m) {
  std::vector<std::size_t> out;
  out.reserve(word.size());
  for (Segment s : word) {
    const auto idx = m.alphabet().index_of(s.symbol());
    if (!idx) throw ValidationError(std::string("symbol '") + s.symbol() + "' is not covered by the PMI matrix");
    out.push_back(*idx);
  }
  return out;
}

double score_encoded(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b, const PmiMatrix& m,
                     const GapParams& gaps) {
  const double* table = m.scores().data();
  const std::size_t n = m.size();
  return affine_global(a.size(), b.size(), gaps, [&](std::size_t i, std::size_t j) { return table[a[i] * n + b[j]]; });
}

double score_vanilla(std::span<const Segment> a, std::span<const Segment> b, const VanillaScores& v,
                     const GapParams& gaps) {
  return affine_global(a.size(), b.size(), gaps,
                       [&](std::size_t i, std::size_t j) { return a[i] == b[j] ? v.match : v.mismatch; });
}

}  // namespace

void GapParams::validate() const {
  if (!std::isfinite(open) || !std::isfinite(extend)) throw ValidationError("gap penalties must be finite");
  if (open > 0.0) throw ValidationError("gap_open must be <= 0");
  if (extend > 0.0) throw ValidationError("gap_extend must be <= 0");
  if (std::fabs(extend) > std::fabs(open)) throw ValidationError("|gap_extend| must not exceed |gap_open|");
}

Scorer Scorer::vanilla(VanillaScores scores, GapParams gaps) {
  gaps.validate();
  if (!(scores.match > scores.mismatch)) throw ValidationError("match score must exceed mismatch score");
  return Scorer(scores, gaps);
}

Scorer Scorer::pmi(std::shared_ptr<const PmiMatrix> matrix, GapParams gaps) {
  gaps.validate();
  if (!matrix) throw ValidationError("PMI scorer needs a matrix");
  return Scorer(std::move(matrix), gaps);
}

double nw_score(std::span<const Segment> a, std::span<const Segment> b, const Scorer& scorer) {
  if (scorer.is_pmi()) return score_encoded(encode(a, scorer.matrix()), encode(b, scorer.matrix()), scorer.matrix(), scorer.gaps());
  return score_vanilla(a, b, scorer.vanilla_scores(), scorer.gaps());
}

SimilarityMatrix::SimilarityMatrix(std::size_t n, std::vector<double> values, std::vector<std::string> labels)
    : n_(n), values_(std::move(values)), labels_(std::move(labels)) {
  if (values_.size() != n_ * n_) throw ValidationError("similarity matrix must be n x n");
  if (!labels_.empty() && labels_.size() != n_) throw ValidationError("similarity matrix labels must match n");
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const double v = values_[i * n_ + j];
      if (!std::isfinite(v) || v < 0.0) throw ValidationError("similarity values must be finite and non-negative");
      if (v != values_[j * n_ + i]) throw ValidationError("similarity matrix must be symmetric");
    }
  }
}

SimilarityMatrix SimilarityMatrix::scaled(double factor) const {
  std::vector<double> v = values_;
  for (auto& x : v) x *= factor;
  return SimilarityMatrix(n_, std::move(v), labels_);
}

SimilarityMatrix similarity_matrix(std::span<const WordForm> forms, const Scorer& scorer, SimilarityOptions options) {
  const std::size_t n = forms.size();
  if (n == 0) throw DegenerateInputError("cannot build a similarity matrix for zero forms");

  std::vector<double> raw(n * n);
  if (scorer.is_pmi()) {
    const auto& m = scorer.matrix();
    std::vector<std::vector<std::size_t>> encoded;
    encoded.reserve(n);
    for (const auto& f : forms) encoded.push_back(encode(f.segments, m));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        raw[i * n + j] = raw[j * n + i] = score_encoded(encoded[i], encoded[j], m, scorer.gaps());
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        raw[i * n + j] = raw[j * n + i] =
            score_vanilla(forms[i].segments, forms[j].segments, scorer.vanilla_scores(), scorer.gaps());
  }

  std::vector<double> values(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double v = raw[i * n + j];
      if (options.normalize) {
        const double denom = 0.5 * (raw[i * n + i] + raw[j * n + j]);
        v = denom > 0.0 ? v / denom : 0.0;
      }
      values[i * n + j] = std::max(0.0, v);
    }
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& f : forms) labels.push_back(f.transcription());
  return SimilarityMatrix(n, std::move(values), std::move(labels));
}

void write_similarity_tsv(const SimilarityMatrix& s, std::ostream& sink) {
  const auto label = [&](std::size_t i) { return s.labels().empty() ? std::to_string(i) : s.labels()[i]; };
  for (std::size_t j = 0; j < s.size(); ++j) sink << '\t' << label(j);
  sink << '\n';
  const auto old_precision = sink.precision(17);
  for (std::size_t i = 0; i < s.size(); ++i) {
    sink << label(i);
    for (std::size_t j = 0; j < s.size(); ++j) sink << '\t' << s(i, j);
    sink << '\n';
  }
  sink.precision(old_precision);
  if (!sink) throw IoError("write failure while writing similarity matrix");
}

}  // namespace cogclust
