#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace bayesmc::app {

enum class OutputFormat { kCsv, kJson };

using Cell = std::variant<std::int64_t, double, std::string>;

/// Column-named result rows, rendered as CSV or as a JSON array of objects.
struct ResultTable {
  std::string name;  ///< file stem
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// 12 significant digits ("%.12g"); non-finite values as inf, -inf, nan.
std::string format_number(double value);

std::string to_csv(const ResultTable& table);
std::string to_json(const ResultTable& table);

/// Writes `dir/<name>.csv` (or `.json`), creating `dir` if needed.
std::filesystem::path write_table(const ResultTable& table, const std::filesystem::path& dir,
                                  OutputFormat format);

}  // namespace bayesmc::app
