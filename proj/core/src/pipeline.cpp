#include "cogclust/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <thread>
#include <unordered_map>

#include "cogclust/error.hpp"

namespace cogclust {

namespace {

std::string triple_key(std::string_view meaning, std::string_view language, std::string_view transcription) {
  std::string key(meaning);
  key.push_back('\0');
  key.append(language).push_back('\0');
  key.append(transcription);
  return key;
}

Partition cluster_one(const std::vector<WordForm>& forms, const Scorer& scorer, const ClusterMethod& method,
                      SimilarityOptions options) {
  const auto s = similarity_matrix(forms, scorer, options);
  if (const auto* crp = std::get_if<CrpConfig>(&method)) return crp_cluster(s, *crp);
  return flat_cluster_threshold(s, std::get<ThresholdConfig>(method).threshold);
}

}  // namespace

std::vector<MeaningClustering> cluster_wordlist(const WordList& wl, const Scorer& scorer, const ClusterMethod& method,
                                                SimilarityOptions options, unsigned jobs) {
  if (const auto* crp = std::get_if<CrpConfig>(&method)) crp->validate();

  std::vector<MeaningClustering> out(wl.meanings().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].meaning = wl.meanings()[i];
    out[i].forms = forms_for_meaning(wl, out[i].meaning);
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < out.size();) {
      try {
        out[i].partition = cluster_one(out[i].forms, scorer, method, options);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = out.size();
      }
    }
  };

  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(out.size(), 1))));
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

Partition gold_partition(std::span<const WordForm> forms) {
  std::unordered_map<std::string, std::size_t> ids;
  std::vector<std::size_t> labels;
  labels.reserve(forms.size());
  for (const auto& f : forms) {
    if (!f.gold_class)
      throw ValidationError("form '" + f.transcription() + "' (" + f.language + ", " + f.meaning + ") has no gold class");
    labels.push_back(ids.try_emplace(*f.gold_class, ids.size()).first->second);
  }
  return Partition(std::move(labels));
}

WordList attach_gold(const WordList& wl, const WordList& gold) {
  std::unordered_map<std::string, std::string> classes;
  for (const auto& f : gold.forms())
    if (f.gold_class) classes.emplace(triple_key(f.meaning, f.language, f.transcription()), *f.gold_class);

  std::vector<WordForm> forms = wl.forms();
  for (auto& f : forms) {
    const auto it = classes.find(triple_key(f.meaning, f.language, f.transcription()));
    if (it == classes.end())
      throw ValidationError("no gold class for '" + f.transcription() + "' (" + f.language + ", " + f.meaning + ")");
    f.gold_class = it->second;
  }
  return WordList::from_forms(std::move(forms));
}

void write_partition_tsv(std::span<const MeaningClustering> clusterings, std::ostream& sink) {
  sink << "meaning\tlanguage\ttranscription\tcluster_id\n";
  for (const auto& c : clusterings)
    for (std::size_t i = 0; i < c.forms.size(); ++i)
      sink << c.meaning << '\t' << c.forms[i].language << '\t' << c.forms[i].transcription() << '\t'
           << c.partition.label(i) << '\n';
  if (!sink) throw IoError("write failure while writing partition");
}

MeaningPartitions read_partition_tsv(std::istream& source, const WordList& wl) {
  struct Slot {
    std::size_t meaning;
    std::size_t item;
  };
  std::unordered_map<std::string, Slot> slots;
  std::vector<std::vector<std::optional<std::size_t>>> labels(wl.meanings().size());
  for (std::size_t m = 0; m < wl.meanings().size(); ++m) {
    const auto forms = forms_for_meaning(wl, wl.meanings()[m]);
    labels[m].resize(forms.size());
    for (std::size_t i = 0; i < forms.size(); ++i)
      slots.emplace(triple_key(forms[i].meaning, forms[i].language, forms[i].transcription()), Slot{m, i});
  }

  std::string raw;
  std::size_t line_no = 0;
  bool header = false;
  while (std::getline(source, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header) {
      if (line != "meaning\tlanguage\ttranscription\tcluster_id")
        throw ParseError("expected partition header 'meaning<TAB>language<TAB>transcription<TAB>cluster_id'", line_no);
      header = true;
      continue;
    }
    std::vector<std::string_view> f;
    for (std::size_t start = 0;;) {
      const auto tab = line.find('\t', start);
      f.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (f.size() != 4) throw ParseError("expected 4 columns, found " + std::to_string(f.size()), line_no);

    std::size_t cluster = 0;
    const auto res = std::from_chars(f[3].data(), f[3].data() + f[3].size(), cluster);
    if (res.ec != std::errc() || res.ptr != f[3].data() + f[3].size() || f[3].empty())
      throw ParseError("invalid cluster id '" + std::string(f[3]) + "'", line_no);

    const auto it = slots.find(triple_key(f[0], f[1], f[2]));
    if (it == slots.end())
      throw ValidationError("row does not match any word-list form: " + std::string(line), line_no);
    auto& slot = labels[it->second.meaning][it->second.item];
    if (slot) throw ValidationError("form listed twice: " + std::string(line), line_no);
    slot = cluster;
  }
  if (source.bad()) throw IoError("read failure while reading partition");

  MeaningPartitions out;
  for (std::size_t m = 0; m < labels.size(); ++m) {
    const auto filled = std::count_if(labels[m].begin(), labels[m].end(), [](const auto& l) { return l.has_value(); });
    if (filled == 0) continue;
    if (static_cast<std::size_t>(filled) != labels[m].size())
      throw ValidationError("partition for meaning '" + wl.meanings()[m] + "' covers " + std::to_string(filled) + " of " +
                            std::to_string(labels[m].size()) + " forms");
    std::vector<std::size_t> raw_labels;
    for (const auto& l : labels[m]) raw_labels.push_back(*l);
    out.emplace_back(wl.meanings()[m], Partition::canonical(raw_labels));
  }
  return out;
}

EvalReport evaluate_clusterings(const WordList& wl, const MeaningPartitions& predictions) {
  MeaningPartitions scored, gold;
  std::size_t skipped = 0;
  for (const auto& [meaning, partition] : predictions) {
    if (!wl.has_gold(meaning)) {
      ++skipped;
      continue;
    }
    scored.emplace_back(meaning, partition);
    gold.emplace_back(meaning, gold_partition(forms_for_meaning(wl, meaning)));
  }
  EvalReport report = evaluate_dataset(scored, gold);
  report.meanings_without_gold = skipped;
  report.synonyms_kept = wl.synonym_count();
  return report;
}

}  // namespace cogclust
