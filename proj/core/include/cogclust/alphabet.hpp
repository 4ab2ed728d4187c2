#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cogclust {

class Alphabet;

// One sound segment. Only an Alphabet can vouch for a symbol, so a Segment
// always belongs to the alphabet it was built against.
class Segment {
 public:
  // Throws ValidationError if `symbol` is not in `alphabet`.
  Segment(char symbol, const Alphabet& alphabet);

  char symbol() const { return symbol_; }

  friend bool operator==(Segment, Segment) = default;
  friend auto operator<=>(Segment, Segment) = default;

 private:
  friend class Alphabet;
  struct Unchecked {};
  Segment(char symbol, Unchecked) : symbol_(symbol) {}

  char symbol_;
};

// Ordered set of single-byte symbols with O(1) membership and index lookup.
class Alphabet {
 public:
  static constexpr char kGap = '-';

  // Symbols must be distinct printable ASCII, excluding the gap symbol and
  // whitespace. Throws ValidationError otherwise.
  explicit Alphabet(std::string_view symbols);

  // The 41-symbol ASJP sound-class code.
  static const Alphabet& asjp();

  bool contains(char c) const { return index_[static_cast<unsigned char>(c)] >= 0; }
  std::optional<std::size_t> index_of(char c) const {
    const int i = index_[static_cast<unsigned char>(c)];
    if (i < 0) return std::nullopt;
    return static_cast<std::size_t>(i);
  }
  std::size_t size() const { return symbols_.size(); }
  const std::string& symbols() const { return symbols_; }
  char symbol_at(std::size_t i) const { return symbols_.at(i); }

  Segment segment(char c) const { return Segment(c, *this); }
  Segment segment_at(std::size_t i) const { return Segment(symbols_.at(i), Segment::Unchecked{}); }

  // Validates every character; the error names the offending symbol.
  std::vector<Segment> segments(std::string_view text) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

 private:
  std::string symbols_;
  std::array<std::int16_t, 256> index_{};
};

std::string to_string(const std::vector<Segment>& segments);

}  // namespace cogclust
