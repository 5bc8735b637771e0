#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "bayesmc/alphabet.hpp"

namespace bayesmc {

/// Reads a plain text file of symbol characters. Whitespace (including line
/// breaks) is skipped. Without an explicit alphabet, one is inferred from the
/// distinct characters in sorted order.
SymbolSequence read_sequence_text(const std::filesystem::path& path,
                                  const std::optional<Alphabet>& alphabet = std::nullopt);

/// Reads one column of a comma-separated file with a header row. `column` is
/// a header name or a zero-based index. Each cell holds one symbol.
SymbolSequence read_sequence_csv(const std::filesystem::path& path, const std::string& column,
                                 const std::optional<Alphabet>& alphabet = std::nullopt);

/// Dispatches on extension: ".csv" goes to read_sequence_csv.
SymbolSequence read_sequence(const std::filesystem::path& path, const std::string& column,
                             const std::optional<Alphabet>& alphabet = std::nullopt);

/// Writes the sequence as one line of characters followed by a newline.
void write_sequence_text(const std::filesystem::path& path, const SymbolSequence& seq);

}  // namespace bayesmc
