#include "cogclust/alphabet.hpp"

#include <cctype>

#include "cogclust/error.hpp"

namespace cogclust {

namespace {

std::string describe(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (std::isprint(u)) return std::string("'") + c + "'";
  static constexpr char kHex[] = "0123456789abcdef";
  return std::string("byte 0x") + kHex[u >> 4] + kHex[u & 0xf];
}

}  // namespace

Segment::Segment(char symbol, const Alphabet& alphabet) : symbol_(symbol) {
  if (!alphabet.contains(symbol)) throw ValidationError("symbol " + describe(symbol) + " is not in the alphabet");
}

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  index_.fill(-1);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const char c = symbols_[i];
    const auto u = static_cast<unsigned char>(c);
    if (c == kGap || !std::isgraph(u)) throw ValidationError("invalid alphabet symbol " + describe(c));
    if (index_[u] >= 0) throw ValidationError("duplicate alphabet symbol " + describe(c));
    index_[u] = static_cast<std::int16_t>(i);
  }
}

const Alphabet& Alphabet::asjp() {
  static const Alphabet kAsjp("pbfvmw8tdszcnrlSZCjT5ykgxNqXh7L4G!ieE3auo");
  return kAsjp;
}

std::vector<Segment> Alphabet::segments(std::string_view text) const {
  std::vector<Segment> out;
  out.reserve(text.size());
  for (char c : text) out.emplace_back(c, *this);
  return out;
}

std::string to_string(const std::vector<Segment>& segments) {
  std::string s;
  s.reserve(segments.size());
  for (Segment seg : segments) s.push_back(seg.symbol());
  return s;
}

}  // namespace cogclust
