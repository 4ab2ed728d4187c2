#include "cogclust/pmi.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>

#include "cogclust/error.hpp"

namespace cogclust {

namespace {

std::string_view chomp(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text, std::size_t line) {
  double v = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) throw ParseError("invalid score '" + std::string(text) + "'", line);
  if (std::isnan(v)) throw ParseError("score is NaN", line);
  return v;
}

std::string pair_name(char a, char b) { return std::string("(") + a + "," + b + ")"; }

}  // namespace

PmiMatrix::PmiMatrix(Alphabet alphabet, std::vector<double> scores)
    : alphabet_(std::move(alphabet)), scores_(std::move(scores)) {
  const auto n = alphabet_.size();
  if (scores_.size() != n * n) throw ValidationError("score table size does not match alphabet");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(scores_[i * n + j] == scores_[j * n + i]))
        throw ValidationError("score table is not symmetric at " + pair_name(alphabet_.symbol_at(i), alphabet_.symbol_at(j)));
}

double PmiMatrix::score(char a, char b) const {
  const auto i = alphabet_.index_of(a);
  const auto j = alphabet_.index_of(b);
  if (!i) throw ValidationError(std::string("symbol '") + a + "' is not covered by the PMI matrix");
  if (!j) throw ValidationError(std::string("symbol '") + b + "' is not covered by the PMI matrix");
  return score(*i, *j);
}

bool PmiMatrix::covers(const Alphabet& other) const {
  for (char c : other.symbols())
    if (!alphabet_.contains(c)) return false;
  return true;
}

PmiMatrix load_pmi(std::istream& source) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<Alphabet> alphabet;
  std::vector<double> scores;
  std::vector<bool> seen;

  while (std::getline(source, raw)) {
    ++line_no;
    const std::string_view line = chomp(raw);
    if (line.empty()) continue;

    if (!alphabet) {
      constexpr std::string_view kTag = "alphabet\t";
      if (!line.starts_with(kTag)) throw ParseError("first line must be 'alphabet<TAB><symbols>'", line_no);
      std::string symbols;
      for (char c : line.substr(kTag.size())) {
        if (c == ' ') continue;
        if (c == Alphabet::kGap) throw FormatError("gap symbol '-' is not allowed in a PMI matrix", line_no);
        symbols.push_back(c);
      }
      try {
        alphabet.emplace(symbols);
      } catch (const ValidationError& e) {
        throw FormatError(e.what(), line_no);
      }
      if (alphabet->size() == 0) throw FormatError("empty alphabet", line_no);
      scores.assign(alphabet->size() * alphabet->size(), 0.0);
      seen.assign(scores.size(), false);
      continue;
    }

    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos || line.find('\t', t2 + 1) != std::string_view::npos)
      throw ParseError("expected 'i<TAB>j<TAB>score'", line_no);
    const auto a = line.substr(0, t1);
    const auto b = line.substr(t1 + 1, t2 - t1 - 1);
    if (a.size() != 1 || b.size() != 1) throw ParseError("segment fields must be single symbols", line_no);
    const auto i = alphabet->index_of(a[0]);
    const auto j = alphabet->index_of(b[0]);
    if (!i || !j) throw FormatError("pair " + pair_name(a[0], b[0]) + " uses a symbol outside the declared alphabet", line_no);
    const double v = parse_double(line.substr(t2 + 1), line_no);

    const auto n = alphabet->size();
    for (auto idx : {*i * n + *j, *j * n + *i}) {
      if (seen[idx] && scores[idx] != v)
        throw FormatError("conflicting scores for pair " + pair_name(a[0], b[0]), line_no);
      scores[idx] = v;
      seen[idx] = true;
    }
  }
  if (source.bad()) throw IoError("read failure while loading PMI matrix");
  if (!alphabet) throw ParseError("missing alphabet line");

  const auto n = alphabet->size();
  std::string missing;
  std::size_t n_missing = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (!seen[i * n + j]) {
        if (n_missing++ < 10) missing += (missing.empty() ? "" : " ") + pair_name(alphabet->symbol_at(i), alphabet->symbol_at(j));
      }
  if (n_missing > 0)
    throw FormatError("missing " + std::to_string(n_missing) + " pair(s): " + missing + (n_missing > 10 ? " ..." : ""));
  return PmiMatrix(std::move(*alphabet), std::move(scores));
}

PmiMatrix load_pmi_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open PMI matrix '" + path + "'");
  try {
    return load_pmi(in);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_pmi(const PmiMatrix& m, std::ostream& sink) {
  const auto& symbols = m.alphabet().symbols();
  sink << "alphabet\t";
  for (std::size_t i = 0; i < symbols.size(); ++i) sink << (i ? " " : "") << symbols[i];
  sink << '\n';
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j)
      sink << symbols[i] << '\t' << symbols[j] << '\t' << format_double(m.score(i, j)) << '\n';
  if (!sink) throw IoError("write failure while saving PMI matrix");
}

PmiEstimate estimate_pmi(std::span<const AlignedPair> aligned_pairs, const Alphabet& alphabet, double smoothing) {
  if (!(smoothing >= 0.0) || !std::isfinite(smoothing)) throw ValidationError("smoothing must be a finite value >= 0");
  const auto n = alphabet.size();
  std::vector<double> joint(n * n, 0.0);  // upper triangle, i <= j
  std::vector<double> tokens(n, 0.0);
  std::size_t positions = 0;

  for (std::size_t p = 0; p < aligned_pairs.size(); ++p) {
    const auto& pair = aligned_pairs[p];
    if (pair.top.size() != pair.bottom.size())
      throw ValidationError("aligned pair " + std::to_string(p + 1) + " has rows of different length");
    for (std::size_t k = 0; k < pair.top.size(); ++k) {
      const char a = pair.top[k];
      const char b = pair.bottom[k];
      if (a == Alphabet::kGap || b == Alphabet::kGap) continue;
      const auto i = alphabet.index_of(a);
      const auto j = alphabet.index_of(b);
      if (!i || !j)
        throw ValidationError(std::string("aligned pair ") + std::to_string(p + 1) + ": symbol '" + (i ? b : a) +
                              "' is not in the alphabet");
      const auto lo = std::min(*i, *j);
      const auto hi = std::max(*i, *j);
      joint[lo * n + hi] += 1.0;
      tokens[*i] += 1.0;
      tokens[*j] += 1.0;
      ++positions;
    }
  }
  if (positions == 0) throw DegenerateInputError("no aligned segment pairs without gaps");

  const double n_pairs = static_cast<double>(n * (n + 1) / 2);
  const double total_joint = static_cast<double>(positions) + smoothing * n_pairs;
  const double total_tokens = 2.0 * total_joint;
  const double token_pseudo = smoothing * static_cast<double>(n + 1);

  std::vector<double> q(n);
  for (std::size_t i = 0; i < n; ++i) q[i] = (tokens[i] + token_pseudo) / total_tokens;

  std::vector<double> scores(n * n);
  std::size_t unobserved = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double c = joint[i * n + j] + smoothing;
      double v;
      if (c == 0.0) {
        v = -std::numeric_limits<double>::infinity();
        ++unobserved;
      } else {
        v = std::log((c / total_joint) / (q[i] * q[j]));
      }
      scores[i * n + j] = v;
      scores[j * n + i] = v;
    }
  }
  return PmiEstimate{PmiMatrix(alphabet, std::move(scores)), positions, unobserved};
}

std::vector<AlignedPair> parse_aligned_pairs(std::istream& source) {
  std::vector<AlignedPair> out;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(source, raw)) {
    ++line_no;
    const std::string_view line = chomp(raw);
    if (line.empty()) continue;
    if (out.empty() && line == "aligned_a\taligned_b") continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos)
      throw ParseError("expected 'aligned_a<TAB>aligned_b'", line_no);
    AlignedPair pair{std::string(line.substr(0, tab)), std::string(line.substr(tab + 1))};
    if (pair.top.size() != pair.bottom.size()) throw ValidationError("aligned rows differ in length", line_no);
    out.push_back(std::move(pair));
  }
  if (source.bad()) throw IoError("read failure while reading aligned pairs");
  return out;
}

}  // namespace cogclust
