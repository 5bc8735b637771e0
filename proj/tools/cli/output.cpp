#include "cli/output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>

#include "bayesmc/error.hpp"

namespace bayesmc::app {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

namespace {

std::string csv_cell(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
  const auto& s = std::get<std::string>(cell);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

}  // namespace

std::string to_csv(const ResultTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const ResultTable& table) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
      const auto& cell = row[i];
      if (const auto* n = std::get_if<std::int64_t>(&cell)) {
        obj[table.columns[i]] = *n;
      } else if (const auto* d = std::get_if<double>(&cell)) {
        // Round-trip through the CSV rendering so both formats carry the same digits.
        if (std::isfinite(*d)) {
          obj[table.columns[i]] = std::stod(format_number(*d));
        } else {
          obj[table.columns[i]] = nullptr;
        }
      } else {
        obj[table.columns[i]] = std::get<std::string>(cell);
      }
    }
    rows.push_back(std::move(obj));
  }
  return rows.dump(1) + "\n";
}

std::filesystem::path write_table(const ResultTable& table, const std::filesystem::path& dir,
                                  OutputFormat format) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + dir.string() + ": " + ec.message());
  const auto path = dir / (table.name + (format == OutputFormat::kCsv ? ".csv" : ".json"));
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << (format == OutputFormat::kCsv ? to_csv(table) : to_json(table));
  if (!out) throw ConfigError("failed writing " + path.string());
  return path;
}

}  // namespace bayesmc::app
