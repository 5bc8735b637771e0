#include "bayesmc/alphabet.hpp"

#include <algorithm>
#include <cctype>

#include "bayesmc/error.hpp"

namespace bayesmc {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  index_.fill(-1);
  if (symbols_.size() < 2) {
    throw ConfigError("alphabet needs at least two symbols, got \"" + symbols_ + "\"");
  }
  if (symbols_.size() > 255) throw ConfigError("alphabet has more than 255 symbols");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const auto c = static_cast<unsigned char>(symbols_[i]);
    if (index_[c] >= 0) {
      throw ConfigError(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
    }
    index_[c] = static_cast<std::int16_t>(i);
  }
}

Alphabet Alphabet::infer(std::string_view text) {
  std::array<bool, 256> seen{};
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) seen[static_cast<unsigned char>(c)] = true;
  }
  std::string symbols;
  for (int c = 0; c < 256; ++c) {
    if (seen[c]) symbols.push_back(static_cast<char>(c));
  }
  return Alphabet(std::move(symbols));
}

char Alphabet::symbol(Symbol index) const {
  if (index >= symbols_.size()) {
    throw DomainError("symbol index " + std::to_string(index) + " outside alphabet of size " +
                      std::to_string(symbols_.size()));
  }
  return symbols_[index];
}

Symbol Alphabet::index_of(char c) const {
  const auto i = index_[static_cast<unsigned char>(c)];
  if (i < 0) throw DomainError(std::string("symbol '") + c + "' not in alphabet \"" + symbols_ + "\"");
  return static_cast<Symbol>(i);
}

SymbolSequence::SymbolSequence(Alphabet alphabet, std::vector<Symbol> data)
    : alphabet_(std::move(alphabet)), data_(std::move(data)) {
  for (Symbol s : data_) {
    if (s >= alphabet_.size()) {
      throw DomainError("symbol index " + std::to_string(s) + " outside alphabet of size " +
                        std::to_string(alphabet_.size()));
    }
  }
}

SymbolSequence SymbolSequence::parse(std::string_view text, const Alphabet& alphabet) {
  std::vector<Symbol> data;
  data.reserve(text.size());
  for (char c : text) data.push_back(alphabet.index_of(c));
  return SymbolSequence(alphabet, std::move(data));
}

std::string SymbolSequence::to_string() const {
  std::string out;
  out.reserve(data_.size());
  for (Symbol s : data_) out.push_back(alphabet_.symbol(s));
  return out;
}

WordIndex encode_word(std::span<const Symbol> word, std::size_t alphabet_size) {
  WordIndex w{static_cast<int>(word.size()), 0};
  for (Symbol s : word) {
    if (s >= alphabet_size) {
      throw DomainError("symbol index " + std::to_string(s) + " outside alphabet of size " +
                        std::to_string(alphabet_size));
    }
    w.code = w.code * alphabet_size + s;
  }
  return w;
}

WordIndex encode_word(std::span<const Symbol> word, const Alphabet& alphabet) {
  return encode_word(word, alphabet.size());
}

std::vector<Symbol> decode_word(WordIndex word, std::size_t alphabet_size) {
  std::vector<Symbol> out(static_cast<std::size_t>(word.order));
  auto code = word.code;
  for (auto i = out.size(); i-- > 0;) {
    out[i] = static_cast<Symbol>(code % alphabet_size);
    code /= alphabet_size;
  }
  if (code != 0) {
    throw DomainError("word code " + std::to_string(word.code) + " too large for order " +
                      std::to_string(word.order));
  }
  return out;
}

std::string word_string(WordIndex word, const Alphabet& alphabet) {
  std::string out;
  for (Symbol s : decode_word(word, alphabet.size())) out.push_back(alphabet.symbol(s));
  return out;
}

WordIndex parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Symbol> symbols;
  for (char c : text) symbols.push_back(alphabet.index_of(c));
  return encode_word(symbols, alphabet);
}

}  // namespace bayesmc
