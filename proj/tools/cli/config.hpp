#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bayesmc/counts.hpp"
#include "bayesmc/entropy_rate.hpp"
#include "bayesmc/processes.hpp"
#include "cli/output.hpp"

namespace bayesmc::app {

enum class CountMode { kAverage, kSample };
enum class OrderPriorKind { kUniform, kPenalty };

/// Data sizes N to sweep. Linear grids step by `step`; log grids place `step`
/// points per decade between start and stop. A nonempty `list` overrides both.
struct NGrid {
  std::uint64_t start = 100;
  std::uint64_t stop = 1000;
  std::uint64_t step = 5;
  bool log = false;
  std::vector<std::uint64_t> list;

  /// Ascending, duplicate-free. Throws ConfigError when empty or malformed.
  std::vector<std::uint64_t> values() const;
};

struct ExperimentConfig {
  std::string source;  ///< builtin name or path to an HMM JSON description
  std::string input;   ///< sequence file (text or csv); exclusive with source
  std::string column;  ///< csv column name or index
  std::string alphabet;
  CountMode mode = CountMode::kAverage;
  std::optional<std::uint64_t> seed;
  int k_min = 1;
  int k_max = 4;
  std::optional<NGrid> grid;
  double alpha = 1.0;
  std::string fake_counts;
  OrderPriorKind prior = OrderPriorKind::kUniform;
  double confidence = 0.95;
  std::size_t density_points = 512;
  std::vector<std::string> density_params;  ///< "word:symbol"; empty = every parameter
  VariancePrefactor variance = VariancePrefactor::kInverseLn2;
  std::filesystem::path out_dir = ".";
  OutputFormat format = OutputFormat::kCsv;
  unsigned jobs = 1;
  std::size_t max_entries = kDefaultEntryCap;

  /// Throws ConfigError naming the first violated constraint.
  void validate() const;
};

/// $BAYESMC_OUT_DIR when set, else the working directory.
std::filesystem::path default_out_dir();

/// Hardware concurrency, at least 1.
unsigned default_jobs();

/// Hyperparameter policy: uniform alpha, or alpha = fake + 1 from a
/// "word,symbol,count" CSV where absent entries mean zero fake counts.
class HyperPolicy {
 public:
  HyperPolicy(double alpha, const std::string& fake_counts_path, const Alphabet& alphabet);

  HyperTable table(int order, std::size_t cap) const;

 private:
  double alpha_;
  Alphabet alphabet_;
  bool from_fake_ = false;
  std::map<std::pair<std::string, char>, double> fake_;
};

/// Where counts come from: an HMM (exact average counts or one seeded
/// realization whose prefixes are counted) or a sequence file.
class DataSource {
 public:
  /// `max_length` is the longest N the sweep will ask for.
  static DataSource from_config(const ExperimentConfig& config, std::uint64_t max_length);

  const std::string& name() const noexcept { return name_; }
  const Alphabet& alphabet() const;
  const LabeledHMM* process() const noexcept { return hmm_ ? &*hmm_ : nullptr; }
  /// Length of the loaded sequence (file input only).
  std::optional<std::uint64_t> sequence_length() const;
  std::optional<double> true_entropy_rate() const noexcept { return true_rate_; }

  CountTable counts(std::uint64_t length, int order, std::size_t cap) const;

 private:
  std::string name_;
  CountMode mode_ = CountMode::kAverage;
  std::optional<LabeledHMM> hmm_;
  std::optional<SymbolSequence> sequence_;
  std::optional<double> true_rate_;
};

/// Resolves the grid against the source: file input without an explicit grid
/// uses the whole sequence.
std::vector<std::uint64_t> resolve_grid(const ExperimentConfig& config);

}  // namespace bayesmc::app
