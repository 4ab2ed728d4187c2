#include "cogclust/wordlist.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "cogclust/error.hpp"

namespace cogclust {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::string_view chomp(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

std::string form_key(std::string_view language, std::string_view meaning, std::string_view transcription) {
  std::string key;
  key.reserve(language.size() + meaning.size() + transcription.size() + 2);
  key.append(language).push_back('\0');
  key.append(meaning).push_back('\0');
  key.append(transcription);
  return key;
}

}  // namespace

class WordListBuilder {
 public:
  void add(WordForm form, std::size_t line) {
    if (form.language.empty()) throw ValidationError("empty language identifier", line);
    if (form.meaning.empty()) throw ValidationError("empty concept identifier", line);
    if (form.segments.empty()) throw ValidationError("empty transcription", line);
    if (!seen_.insert(form_key(form.language, form.meaning, form.transcription())).second) {
      ++wl_.duplicates_collapsed_;
      return;
    }
    auto [it, fresh] = wl_.by_meaning_.try_emplace(form.meaning);
    if (fresh) wl_.meanings_.push_back(form.meaning);
    if (languages_.insert(form.language).second) wl_.languages_.push_back(form.language);
    it->second.push_back(wl_.forms_.size());

    auto& tally = gold_tally_[form.meaning];
    (form.gold_class ? tally.with : tally.without)++;
    wl_.forms_.push_back(std::move(form));
  }

  WordList finish() && {
    for (const auto& meaning : wl_.meanings_) {
      const auto& tally = gold_tally_.at(meaning);
      if (tally.with > 0 && tally.without > 0)
        throw ValidationError("meaning '" + meaning + "' has gold classes on only " + std::to_string(tally.with) +
                              " of " + std::to_string(tally.with + tally.without) + " forms");
      wl_.gold_[meaning] = tally.with > 0;
    }
    return std::move(wl_);
  }

 private:
  struct GoldTally {
    std::size_t with = 0;
    std::size_t without = 0;
  };

  WordList wl_;
  std::unordered_set<std::string> seen_;
  std::unordered_set<std::string> languages_;
  std::unordered_map<std::string, GoldTally> gold_tally_;
};

WordList WordList::from_forms(std::vector<WordForm> forms) {
  WordListBuilder builder;
  for (auto& f : forms) builder.add(std::move(f), 0);
  return std::move(builder).finish();
}

bool WordList::has_meaning(std::string_view meaning) const {
  return by_meaning_.find(std::string(meaning)) != by_meaning_.end();
}

bool WordList::has_gold(std::string_view meaning) const {
  const auto it = gold_.find(std::string(meaning));
  return it != gold_.end() && it->second;
}

std::size_t WordList::synonym_count() const {
  std::unordered_set<std::string> seen;
  std::size_t extra = 0;
  for (const auto& f : forms_)
    if (!seen.insert(f.language + '\0' + f.meaning).second) ++extra;
  return extra;
}

std::vector<WordForm> forms_for_meaning(const WordList& wl, std::string_view meaning) {
  const auto it = wl.by_meaning_.find(std::string(meaning));
  if (it == wl.by_meaning_.end()) throw NotFoundError("unknown meaning '" + std::string(meaning) + "'");
  std::vector<WordForm> out;
  out.reserve(it->second.size());
  for (auto idx : it->second) out.push_back(wl.forms_[idx]);
  return out;
}

WordList parse_wordlist(std::istream& source, const ParseConfig& config) {
  const Alphabet& alphabet = *config.alphabet;
  WordListBuilder builder;

  std::string raw;
  std::size_t line_no = 0;
  std::size_t n_columns = 0;
  std::ptrdiff_t col_language = -1, col_meaning = -1, col_transcription = -1, col_gold = -1;
  bool have_header = false;

  while (std::getline(source, raw)) {
    ++line_no;
    std::string_view line = chomp(raw);
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    if (line.empty()) continue;
    const auto fields = split_tabs(line);

    if (!have_header) {
      n_columns = fields.size();
      for (std::size_t i = 0; i < fields.size(); ++i) {
        const auto f = fields[i];
        const auto idx = static_cast<std::ptrdiff_t>(i);
        if (f == config.language_column) col_language = idx;
        else if (f == config.meaning_column) col_meaning = idx;
        else if (f == config.transcription_column) col_transcription = idx;
        else if (f == config.gold_column) col_gold = idx;
      }
      if (col_language < 0 || col_meaning < 0 || col_transcription < 0)
        throw ParseError("header must name columns '" + config.language_column + "', '" + config.meaning_column +
                             "' and '" + config.transcription_column + "'",
                         line_no);
      have_header = true;
      continue;
    }

    if (fields.size() != n_columns)
      throw ParseError("expected " + std::to_string(n_columns) + " columns, found " + std::to_string(fields.size()),
                       line_no);

    WordForm form;
    form.language = std::string(fields[col_language]);
    form.meaning = std::string(fields[col_meaning]);

    std::string_view text = fields[col_transcription];
    form.segments.reserve(text.size());
    for (char c : text) {
      if (alphabet.contains(c)) {
        form.segments.push_back(alphabet.segment(c));
        continue;
      }
      if (config.modifiers == ModifierPolicy::kStrip && config.modifier_chars.find(c) != std::string::npos) continue;
      try {
        alphabet.segment(c);
      } catch (const ValidationError& e) {
        throw ValidationError(std::string(e.what()) + " (transcription \"" + std::string(text) + "\")", line_no);
      }
    }
    if (col_gold >= 0 && !fields[col_gold].empty()) form.gold_class = std::string(fields[col_gold]);
    builder.add(std::move(form), line_no);
  }
  if (source.bad()) throw IoError("read failure while parsing word list");
  return std::move(builder).finish();
}

WordList parse_wordlist_file(const std::string& path, const ParseConfig& config) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open word list '" + path + "'");
  try {
    return parse_wordlist(in, config);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void write_wordlist(const WordList& wl, std::ostream& sink) {
  sink << "language\tconcept\ttranscription\tcognate_class\n";
  for (const auto& f : wl.forms())
    sink << f.language << '\t' << f.meaning << '\t' << f.transcription() << '\t' << f.gold_class.value_or("") << '\n';
  if (!sink) throw IoError("write failure while writing word list");
}

}  // namespace cogclust
