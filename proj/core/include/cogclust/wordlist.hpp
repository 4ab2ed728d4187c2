#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cogclust/alphabet.hpp"

namespace cogclust {

struct WordForm {
  std::string language;
  std::string meaning;
  std::vector<Segment> segments;
  std::optional<std::string> gold_class;

  std::string transcription() const { return to_string(segments); }

  friend bool operator==(const WordForm&, const WordForm&) = default;
};

enum class ModifierPolicy {
  kStrict,  // any out-of-alphabet character is an error
  kStrip,   // drop ASJP modifier characters, then validate
};

struct ParseConfig {
  const Alphabet* alphabet = &Alphabet::asjp();
  ModifierPolicy modifiers = ModifierPolicy::kStrip;
  std::string modifier_chars = "~$\"*";

  // Header names locating each role. The gold column may be absent.
  std::string language_column = "language";
  std::string meaning_column = "concept";
  std::string transcription_column = "transcription";
  std::string gold_column = "cognate_class";
};

// Immutable multilingual word list. Forms keep file order, both globally and
// within each meaning; that order drives the clustering scan.
class WordList {
 public:
  WordList() = default;

  // Applies the same dedup and validation rules as parsing.
  static WordList from_forms(std::vector<WordForm> forms);

  const std::vector<WordForm>& forms() const { return forms_; }
  const std::vector<std::string>& meanings() const { return meanings_; }
  const std::vector<std::string>& languages() const { return languages_; }

  bool has_meaning(std::string_view meaning) const;
  // True when every form of `meaning` carries a gold class.
  bool has_gold(std::string_view meaning) const;

  // Rows dropped because their (language, meaning, transcription) repeated an
  // earlier row.
  std::size_t duplicates_collapsed() const { return duplicates_collapsed_; }
  // Forms beyond the first for some (language, meaning): synonyms kept as
  // separate items.
  std::size_t synonym_count() const;

  friend bool operator==(const WordList& a, const WordList& b) {
    return a.forms_ == b.forms_ && a.meanings_ == b.meanings_ && a.languages_ == b.languages_;
  }

 private:
  friend class WordListBuilder;

  std::vector<WordForm> forms_;
  std::vector<std::string> meanings_;
  std::vector<std::string> languages_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_meaning_;
  std::unordered_map<std::string, bool> gold_;
  std::size_t duplicates_collapsed_ = 0;

  friend std::vector<WordForm> forms_for_meaning(const WordList&, std::string_view);
};

WordList parse_wordlist(std::istream& source, const ParseConfig& config = {});
WordList parse_wordlist_file(const std::string& path, const ParseConfig& config = {});

// Throws NotFoundError for an unknown meaning.
std::vector<WordForm> forms_for_meaning(const WordList& wl, std::string_view meaning);

// Writes the 4-column TSV form that parse_wordlist reads back.
void write_wordlist(const WordList& wl, std::ostream& sink);

}  // namespace cogclust
