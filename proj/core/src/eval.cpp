#include "cogclust/eval.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "cogclust/error.hpp"

namespace cogclust {

double harmonic_mean(double p, double r) { return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0; }

BcubedScore bcubed(const Partition& predicted, const Partition& gold) {
  if (predicted.size() != gold.size())
    throw ValidationError("predicted partition covers " + std::to_string(predicted.size()) + " items, gold covers " +
                          std::to_string(gold.size()));
  const std::size_t n = predicted.size();
  if (n == 0) throw ValidationError("B-cubed needs at least one item");

  const auto pred_sizes = predicted.cluster_sizes();
  const auto gold_sizes = gold.cluster_sizes();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> overlap;
  for (std::size_t i = 0; i < n; ++i) ++overlap[{predicted.label(i), gold.label(i)}];

  double p_sum = 0.0, r_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double both = static_cast<double>(overlap.at({predicted.label(i), gold.label(i)}));
    p_sum += both / static_cast<double>(pred_sizes[predicted.label(i)]);
    r_sum += both / static_cast<double>(gold_sizes[gold.label(i)]);
  }
  BcubedScore s;
  s.precision = p_sum / static_cast<double>(n);
  s.recall = r_sum / static_cast<double>(n);
  s.f_score = harmonic_mean(s.precision, s.recall);
  return s;
}

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) return std::nullopt;
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

EvalReport evaluate_dataset(const MeaningPartitions& predictions, const MeaningPartitions& gold) {
  std::map<std::string, const Partition*> gold_by_meaning;
  for (const auto& [meaning, p] : gold)
    if (!gold_by_meaning.emplace(meaning, &p).second) throw ValidationError("duplicate gold meaning '" + meaning + "'");
  std::set<std::string> predicted_keys;
  for (const auto& [meaning, p] : predictions)
    if (!predicted_keys.insert(meaning).second) throw ValidationError("duplicate predicted meaning '" + meaning + "'");
  for (const auto& [meaning, p] : gold)
    if (!predicted_keys.contains(meaning)) throw ValidationError("meaning '" + meaning + "' has gold but no prediction");

  EvalReport report;
  std::vector<double> predicted_k, true_k;
  for (const auto& [meaning, pred] : predictions) {
    const auto it = gold_by_meaning.find(meaning);
    if (it == gold_by_meaning.end()) throw ValidationError("meaning '" + meaning + "' has a prediction but no gold");
    const Partition& g = *it->second;
    MeaningScore row;
    row.meaning = meaning;
    try {
      row.score = bcubed(pred, g);
    } catch (const ValidationError& e) {
      throw ValidationError("meaning '" + meaning + "': " + e.what());
    }
    row.predicted_k = pred.cluster_count();
    row.true_k = g.cluster_count();
    row.items = pred.size();
    report.aggregate.precision += row.score.precision;
    report.aggregate.recall += row.score.recall;
    report.aggregate.f_score += row.score.f_score;
    predicted_k.push_back(static_cast<double>(row.predicted_k));
    true_k.push_back(static_cast<double>(row.true_k));
    report.per_meaning.push_back(std::move(row));
  }
  if (!report.per_meaning.empty()) {
    const double m = static_cast<double>(report.per_meaning.size());
    report.aggregate.precision /= m;
    report.aggregate.recall /= m;
    report.aggregate.f_score /= m;
  }
  report.cluster_count_correlation = pearson(predicted_k, true_k);
  return report;
}

namespace {

std::string fixed(double v, int decimals) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(decimals) << v;
  return os.str();
}

}  // namespace

void write_report_text(const EvalReport& report, std::ostream& sink, ReportStyle style) {
  const int d = style.decimals;
  sink << "meaning\titems\ttrue_k\tpred_k\tprecision\trecall\tf_score\n";
  for (const auto& row : report.per_meaning)
    sink << row.meaning << '\t' << row.items << '\t' << row.true_k << '\t' << row.predicted_k << '\t'
         << fixed(row.score.precision, d) << '\t' << fixed(row.score.recall, d) << '\t' << fixed(row.score.f_score, d)
         << '\n';
  sink << "\nmeanings evaluated: " << report.per_meaning.size() << '\n';
  sink << "meanings without gold (skipped): " << report.meanings_without_gold << '\n';
  sink << "synonyms kept as separate items: " << report.synonyms_kept << '\n';
  sink << "B-cubed precision: " << fixed(report.aggregate.precision, d) << '\n';
  sink << "B-cubed recall: " << fixed(report.aggregate.recall, d) << '\n';
  sink << "B-cubed F-score: " << fixed(report.aggregate.f_score, d) << '\n';
  sink << "cluster-count correlation (r x 100): "
       << (report.cluster_count_correlation ? fixed(100.0 * *report.cluster_count_correlation, d) : "undefined") << '\n';
  if (!sink) throw IoError("write failure while writing report");
}

void write_report_kv(const EvalReport& report, std::ostream& sink, ReportStyle style) {
  const int d = style.decimals;
  for (const auto& row : report.per_meaning) {
    const std::string p = "meaning." + row.meaning + ".";
    sink << p << "items=" << row.items << '\n'
         << p << "true_k=" << row.true_k << '\n'
         << p << "predicted_k=" << row.predicted_k << '\n'
         << p << "precision=" << fixed(row.score.precision, d) << '\n'
         << p << "recall=" << fixed(row.score.recall, d) << '\n'
         << p << "f_score=" << fixed(row.score.f_score, d) << '\n';
  }
  sink << "meanings_evaluated=" << report.per_meaning.size() << '\n'
       << "meanings_without_gold=" << report.meanings_without_gold << '\n'
       << "synonyms_kept=" << report.synonyms_kept << '\n'
       << "precision=" << fixed(report.aggregate.precision, d) << '\n'
       << "recall=" << fixed(report.aggregate.recall, d) << '\n'
       << "f_score=" << fixed(report.aggregate.f_score, d) << '\n'
       << "cluster_count_correlation="
       << (report.cluster_count_correlation ? fixed(*report.cluster_count_correlation, d) : "undefined") << '\n';
  if (!sink) throw IoError("write failure while writing report");
}

}  // namespace cogclust
