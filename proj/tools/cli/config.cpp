#include "cli/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "bayesmc/error.hpp"
#include "bayesmc/sequence_io.hpp"

namespace bayesmc::app {

std::vector<std::uint64_t> NGrid::values() const {
  std::set<std::uint64_t> out;
  if (!list.empty()) {
    for (auto n : list) {
      if (n == 0) throw ConfigError("N grid entries must be positive");
      out.insert(n);
    }
    return {out.begin(), out.end()};
  }
  if (start == 0 || start > stop) {
    throw ConfigError("N grid needs 0 < n-start <= n-stop, got " + std::to_string(start) + ".." +
                      std::to_string(stop));
  }
  if (step == 0) throw ConfigError("n-step must be positive");
  if (log) {
    const double per_decade = static_cast<double>(step);
    for (std::uint64_t i = 0;; ++i) {
      const double v = std::round(static_cast<double>(start) *
                                  std::pow(10.0, static_cast<double>(i) / per_decade));
      if (v > static_cast<double>(stop)) break;
      out.insert(static_cast<std::uint64_t>(v));
    }
  } else {
    for (std::uint64_t n = start; n <= stop; n += step) out.insert(n);
  }
  return {out.begin(), out.end()};
}

void ExperimentConfig::validate() const {
  if (source.empty() == input.empty()) {
    throw ConfigError("exactly one of --source and --input must be given");
  }
  if (k_min < 1 || k_max < k_min) {
    throw ConfigError("order range needs 1 <= k-min <= k-max, got " + std::to_string(k_min) +
                      ".." + std::to_string(k_max));
  }
  if (!input.empty() && mode == CountMode::kSample) {
    throw ConfigError("--mode sample needs an HMM --source, not an --input file");
  }
  if (mode == CountMode::kSample && !seed) throw ConfigError("--mode sample requires --seed");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ConfigError("--alpha must be positive");
  if (!(confidence > 0.0 && confidence < 1.0)) throw ConfigError("--confidence must lie in (0,1)");
  if (density_points == 0) throw ConfigError("--density-points must be positive");
  if (jobs == 0) throw ConfigError("--jobs must be positive");
  if (grid) grid->values();
  try {
    table_entries(alphabet.empty() ? 2 : alphabet.size(), k_min, max_entries);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("k-min is too large: ") + e.what());
  }
}

std::filesystem::path default_out_dir() {
  if (const char* env = std::getenv("BAYESMC_OUT_DIR"); env != nullptr && *env != '\0') return env;
  return ".";
}

unsigned default_jobs() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

HyperPolicy::HyperPolicy(double alpha, const std::string& fake_counts_path, const Alphabet& alphabet)
    : alpha_(alpha), alphabet_(alphabet) {
  if (fake_counts_path.empty()) return;
  from_fake_ = true;
  std::ifstream in(fake_counts_path);
  if (!in) throw ConfigError("cannot open fake counts file " + fake_counts_path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::stringstream row(line);
    std::string word, symbol, count;
    std::getline(row, word, ',');
    std::getline(row, symbol, ',');
    std::getline(row, count, ',');
    if (line_no == 1 && word == "word") continue;  // header
    double value = 0.0;
    try {
      std::size_t used = 0;
      value = std::stod(count, &used);
    } catch (const std::exception&) {
      throw ConfigError(fake_counts_path + ":" + std::to_string(line_no) + ": bad count");
    }
    if (symbol.size() != 1 || !alphabet_.contains(symbol[0])) {
      throw ConfigError(fake_counts_path + ":" + std::to_string(line_no) + ": bad symbol");
    }
    for (char c : word) {
      if (!alphabet_.contains(c)) {
        throw ConfigError(fake_counts_path + ":" + std::to_string(line_no) + ": bad word");
      }
    }
    if (!(value >= 0.0)) {
      throw ConfigError(fake_counts_path + ":" + std::to_string(line_no) +
                        ": fake counts must be nonnegative");
    }
    fake_[{word, symbol[0]}] = value;
  }
}

HyperTable HyperPolicy::table(int order, std::size_t cap) const {
  TableShape shape(alphabet_.size(), order, cap);
  if (!from_fake_) return HyperTable(shape, std::vector<double>(shape.num_entries(), alpha_));
  std::vector<double> fake(shape.num_entries(), 0.0);
  for (const auto& [key, value] : fake_) {
    if (static_cast<int>(key.first.size()) != order) continue;
    const auto h = parse_word(key.first, alphabet_);
    fake[shape.index(h.code, alphabet_.index_of(key.second))] = value;
  }
  return hyper_from_fake_counts(shape, fake);
}

DataSource DataSource::from_config(const ExperimentConfig& config, std::uint64_t max_length) {
  DataSource ds;
  ds.mode_ = config.mode;
  std::optional<Alphabet> alphabet;
  if (!config.alphabet.empty()) alphabet = Alphabet(config.alphabet);
  if (!config.input.empty()) {
    ds.name_ = std::filesystem::path(config.input).filename().string();
    ds.sequence_ = read_sequence(config.input, config.column, alphabet);
    return ds;
  }
  if (auto builtin = builtin_process(config.source)) {
    ds.hmm_ = std::move(builtin);
    ds.true_rate_ = builtin_entropy_rate(config.source);
    ds.name_ = config.source;
  } else if (std::filesystem::path(config.source).extension() == ".json") {
    ds.hmm_ = load_hmm_file(config.source);
    ds.name_ = std::filesystem::path(config.source).stem().string();
    if (is_unifilar(*ds.hmm_)) ds.true_rate_ = bayesmc::true_entropy_rate(*ds.hmm_);
  } else {
    throw ConfigError("unknown source \"" + config.source +
                      "\" (builtins: golden-mean, even, sns; or an HMM .json file)");
  }
  if (config.mode == CountMode::kSample) {
    Rng rng(*config.seed);
    ds.sequence_ = sample_sequence(*ds.hmm_, static_cast<std::size_t>(max_length), rng);
  }
  return ds;
}

const Alphabet& DataSource::alphabet() const {
  return hmm_ ? hmm_->alphabet() : sequence_->alphabet();
}

std::optional<std::uint64_t> DataSource::sequence_length() const {
  if (!sequence_) return std::nullopt;
  return sequence_->size();
}

CountTable DataSource::counts(std::uint64_t length, int order, std::size_t cap) const {
  if (hmm_ && mode_ == CountMode::kAverage) return average_counts(*hmm_, length, order, cap);
  if (length > sequence_->size()) {
    throw ConfigError("N = " + std::to_string(length) + " exceeds the sequence length " +
                      std::to_string(sequence_->size()));
  }
  const auto all = sequence_->symbols();
  SymbolSequence prefix(sequence_->alphabet(),
                        std::vector<Symbol>(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(length)));
  return count_words(prefix, order, cap);
}

std::vector<std::uint64_t> resolve_grid(const ExperimentConfig& config) {
  if (config.grid) return config.grid->values();
  if (!config.input.empty()) return {};  // filled in from the sequence length
  return NGrid{}.values();
}

}  // namespace bayesmc::app
