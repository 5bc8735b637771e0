#include "bayesmc/sequence_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "bayesmc/error.hpp"

namespace bayesmc {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string trim(std::string_view s) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return std::string(s);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
      cell.push_back(c);
    } else if (c == ',' && !quoted) {
      cells.push_back(trim(cell));
      cell.clear();
    } else {
      cell.push_back(c);
    }
  }
  cells.push_back(trim(cell));
  return cells;
}

SymbolSequence to_sequence(const std::string& chars, const std::optional<Alphabet>& alphabet,
                           const std::string& origin) {
  if (chars.empty()) throw ConfigError(origin + " holds no symbols");
  const Alphabet alpha = alphabet ? *alphabet : Alphabet::infer(chars);
  try {
    return SymbolSequence::parse(chars, alpha);
  } catch (const DomainError& e) {
    throw ConfigError(origin + ": " + e.what());
  }
}

}  // namespace

SymbolSequence read_sequence_text(const std::filesystem::path& path,
                                  const std::optional<Alphabet>& alphabet) {
  const auto raw = read_file(path);
  std::string chars;
  chars.reserve(raw.size());
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) chars.push_back(c);
  }
  return to_sequence(chars, alphabet, path.string());
}

SymbolSequence read_sequence_csv(const std::filesystem::path& path, const std::string& column,
                                 const std::optional<Alphabet>& alphabet) {
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line)) throw ConfigError(path.string() + " is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split_csv_line(line);

  std::size_t index = header.size();
  const auto named = std::find(header.begin(), header.end(), column);
  if (named != header.end()) {
    index = static_cast<std::size_t>(named - header.begin());
  } else {
    std::size_t parsed = 0;
    const auto* end = column.data() + column.size();
    const auto [ptr, ec] = std::from_chars(column.data(), end, parsed);
    if (ec == std::errc() && ptr == end && parsed < header.size()) index = parsed;
  }
  if (index >= header.size()) {
    throw ConfigError("column \"" + column + "\" not found in " + path.string());
  }

  std::string chars;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const auto cells = split_csv_line(line);
    if (index >= cells.size() || cells[index].size() != 1) {
      throw ConfigError(path.string() + ":" + std::to_string(line_no) +
                        ": expected a single-character symbol in column \"" + column + "\"");
    }
    chars.push_back(cells[index][0]);
  }
  return to_sequence(chars, alphabet, path.string());
}

SymbolSequence read_sequence(const std::filesystem::path& path, const std::string& column,
                             const std::optional<Alphabet>& alphabet) {
  if (path.extension() == ".csv") {
    return read_sequence_csv(path, column.empty() ? std::string("0") : column, alphabet);
  }
  return read_sequence_text(path, alphabet);
}

void write_sequence_text(const std::filesystem::path& path, const SymbolSequence& seq) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << seq.to_string() << '\n';
  if (!out) throw ConfigError("failed writing " + path.string());
}

}  // namespace bayesmc
