#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bayesmc {

using Symbol = std::uint8_t;

/// Finite ordered set of single-character symbols. Index of a symbol is its
/// position in the declaration order.
class Alphabet {
 public:
  /// Throws ConfigError unless there are at least two distinct symbols.
  explicit Alphabet(std::string symbols);

  static Alphabet binary() { return Alphabet("01"); }

  /// Distinct characters of `text` in sorted order, whitespace ignored.
  static Alphabet infer(std::string_view text);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbols() const noexcept { return symbols_; }
  char symbol(Symbol index) const;
  bool contains(char c) const noexcept { return index_[static_cast<unsigned char>(c)] >= 0; }

  /// Throws DomainError for characters outside the alphabet.
  Symbol index_of(char c) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::string symbols_;
  std::array<std::int16_t, 256> index_{};
};

/// Data D = s_0 ... s_{N-1} as symbol indices over an alphabet.
class SymbolSequence {
 public:
  SymbolSequence(Alphabet alphabet, std::vector<Symbol> data);

  /// Every character of `text` must belong to `alphabet`.
  static SymbolSequence parse(std::string_view text, const Alphabet& alphabet);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const Symbol> symbols() const noexcept { return data_; }
  std::size_t size() const noexcept { return data_.size(); }
  Symbol operator[](std::size_t i) const { return data_[i]; }

  std::string to_string() const;

 private:
  Alphabet alphabet_;
  std::vector<Symbol> data_;
};

/// Word of length `order` encoded base-|A|, earliest symbol most significant.
struct WordIndex {
  int order = 0;
  std::uint64_t code = 0;

  friend bool operator==(const WordIndex&, const WordIndex&) = default;
};

WordIndex encode_word(std::span<const Symbol> word, std::size_t alphabet_size);
WordIndex encode_word(std::span<const Symbol> word, const Alphabet& alphabet);
std::vector<Symbol> decode_word(WordIndex word, std::size_t alphabet_size);

/// Renders a word with the alphabet's characters ("" for the empty word).
std::string word_string(WordIndex word, const Alphabet& alphabet);

/// Parses a character string into a WordIndex over `alphabet`.
WordIndex parse_word(std::string_view text, const Alphabet& alphabet);

}  // namespace bayesmc
