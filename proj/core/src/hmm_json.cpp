#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "bayesmc/error.hpp"
#include "bayesmc/processes.hpp"

namespace bayesmc {

namespace {

using nlohmann::json;

std::vector<double> read_matrix(const json& m, std::size_t states, const std::string& label) {
  if (!m.is_array() || m.size() != states) {
    throw ConfigError("shape: matrix for symbol '" + label + "' must have " +
                      std::to_string(states) + " rows");
  }
  std::vector<double> out;
  out.reserve(states * states);
  for (const auto& row : m) {
    if (!row.is_array() || row.size() != states) {
      throw ConfigError("shape: every row of the matrix for symbol '" + label + "' must have " +
                        std::to_string(states) + " entries");
    }
    for (const auto& v : row) {
      if (!v.is_number()) {
        throw ConfigError("matrix for symbol '" + label + "' has a non-numeric entry");
      }
      out.push_back(v.get<double>());
    }
  }
  return out;
}

}  // namespace

LabeledHMM load_hmm_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("HMM description is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("HMM description must be a JSON object");
  for (const char* key : {"states", "alphabet", "matrices"}) {
    if (!doc.contains(key)) throw ConfigError(std::string("HMM description lacks \"") + key + "\"");
  }
  if (!doc["states"].is_number_integer() || doc["states"].get<long long>() < 1) {
    throw ConfigError("\"states\" must be a positive integer");
  }
  const auto states = doc["states"].get<std::size_t>();

  std::string symbols;
  const auto& alpha = doc["alphabet"];
  if (alpha.is_string()) {
    symbols = alpha.get<std::string>();
  } else if (alpha.is_array()) {
    for (const auto& s : alpha) {
      if (!s.is_string() || s.get<std::string>().size() != 1) {
        throw ConfigError("\"alphabet\" entries must be single characters");
      }
      symbols += s.get<std::string>();
    }
  } else {
    throw ConfigError("\"alphabet\" must be a string or an array of single characters");
  }
  Alphabet alphabet(symbols);

  const auto& mats = doc["matrices"];
  std::vector<std::vector<double>> matrices;
  for (std::size_t s = 0; s < alphabet.size(); ++s) {
    const std::string label(1, alphabet.symbol(static_cast<Symbol>(s)));
    if (mats.is_object()) {
      if (!mats.contains(label)) throw ConfigError("\"matrices\" lacks symbol '" + label + "'");
      matrices.push_back(read_matrix(mats[label], states, label));
    } else if (mats.is_array()) {
      if (mats.size() != alphabet.size()) {
        throw ConfigError("\"matrices\" must hold one matrix per alphabet symbol");
      }
      matrices.push_back(read_matrix(mats[s], states, label));
    } else {
      throw ConfigError("\"matrices\" must be an object keyed by symbol or an array");
    }
  }
  if (mats.is_object() && mats.size() != alphabet.size()) {
    throw ConfigError("\"matrices\" has keys that are not alphabet symbols");
  }
  return LabeledHMM(std::move(alphabet), states, std::move(matrices));
}

LabeledHMM load_hmm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open HMM description " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_hmm_json(buffer.str());
}

}  // namespace bayesmc
