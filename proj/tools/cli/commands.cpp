#include "cli/commands.hpp"

#include <iostream>
#include <map>

#include "bayesmc/entropy_rate.hpp"
#include "bayesmc/error.hpp"
#include "bayesmc/inference.hpp"
#include "bayesmc/model_comparison.hpp"
#include "bayesmc/sequence_io.hpp"
#include "cli/parallel.hpp"

namespace bayesmc::app {

namespace {

struct Sweep {
  DataSource source;
  std::vector<std::uint64_t> grid;
  std::vector<int> orders;
  HyperPolicy hyper;
};

// Orders whose tables fit under the entry cap; the rest are dropped with a warning.
std::vector<int> usable_orders(const ExperimentConfig& config, std::size_t alphabet_size) {
  std::vector<int> orders;
  for (int k = config.k_min; k <= config.k_max; ++k) {
    try {
      table_entries(alphabet_size, k, config.max_entries);
      orders.push_back(k);
    } catch (const DomainError&) {
      std::cerr << "{\"warning\":\"order_excluded\",\"k\":" << k
                << ",\"message\":\"table exceeds --max-entries\"}\n";
    }
  }
  if (orders.empty()) throw ConfigError("no order in the range fits under --max-entries");
  return orders;
}

Sweep prepare(const ExperimentConfig& config) {
  config.validate();
  auto grid = resolve_grid(config);
  const std::uint64_t max_length = grid.empty() ? 0 : grid.back();
  auto source = DataSource::from_config(config, max_length);
  if (grid.empty()) grid.push_back(*source.sequence_length());
  if (auto len = source.sequence_length(); len && grid.back() > *len) {
    throw ConfigError("N grid reaches " + std::to_string(grid.back()) +
                      " but the sequence has only " + std::to_string(*len) + " symbols");
  }
  if (grid.front() <= static_cast<std::uint64_t>(config.k_max)) {
    throw ConfigError("every N must exceed k-max = " + std::to_string(config.k_max) +
                      "; smallest N is " + std::to_string(grid.front()));
  }
  auto orders = usable_orders(config, source.alphabet().size());
  HyperPolicy hyper(config.alpha, config.fake_counts, source.alphabet());
  return {std::move(source), std::move(grid), std::move(orders), std::move(hyper)};
}

Cell as_cell(std::uint64_t n) { return static_cast<std::int64_t>(n); }

std::vector<std::filesystem::path> write_all(const std::vector<ResultTable>& tables,
                                             const std::filesystem::path& dir, OutputFormat format) {
  std::vector<std::filesystem::path> paths;
  for (const auto& t : tables) paths.push_back(write_table(t, dir, format));
  return paths;
}

// Selected (word, symbol) pairs of order k for density export.
std::vector<std::pair<std::uint64_t, Symbol>> density_targets(const ExperimentConfig& config,
                                                              const Alphabet& alphabet,
                                                              const TableShape& shape) {
  std::vector<std::pair<std::uint64_t, Symbol>> out;
  if (config.density_params.empty()) {
    for (std::uint64_t h = 0; h < shape.num_words(); ++h) {
      for (std::size_t s = 0; s < shape.alphabet_size(); ++s) out.emplace_back(h, static_cast<Symbol>(s));
    }
    return out;
  }
  for (const auto& spec : config.density_params) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos || colon + 2 != spec.size()) {
      throw ConfigError("--density-param expects word:symbol, got \"" + spec + "\"");
    }
    const auto word = spec.substr(0, colon);
    if (static_cast<int>(word.size()) != shape.order()) continue;
    try {
      out.emplace_back(parse_word(word, alphabet).code, alphabet.index_of(spec[colon + 1]));
    } catch (const DomainError& e) {
      throw ConfigError("--density-param \"" + spec + "\": " + e.what());
    }
  }
  return out;
}

}  // namespace

std::vector<ResultTable> run_infer(const ExperimentConfig& config) {
  const auto sweep = prepare(config);
  const auto& alphabet = sweep.source.alphabet();

  struct PointResult {
    std::vector<std::vector<Cell>> summary;
    std::vector<std::vector<Cell>> density;
  };
  const auto points = parallel_map(sweep.grid.size(), config.jobs, [&](std::size_t i) {
    PointResult r;
    const auto n = sweep.grid[i];
    for (int k : sweep.orders) {
      const auto counts = sweep.source.counts(n, k, config.max_entries);
      const auto hyper = sweep.hyper.table(k, config.max_entries);
      for (const auto& row : summarize_posterior(counts, hyper, alphabet, config.confidence)) {
        r.summary.push_back({as_cell(n), std::int64_t{k}, row.word, std::string(1, row.symbol),
                             row.count, row.alpha, row.mean, row.variance, row.ci_low, row.ci_high});
      }
      const auto post = posterior(counts, hyper);
      for (const auto& [h, s] : density_targets(config, alphabet, counts.shape())) {
        const auto word = word_string({k, h}, alphabet);
        const std::string symbol(1, alphabet.symbol(s));
        for (const auto& [x, d] : density_grid(marginal(post, h, s), config.density_points)) {
          r.density.push_back({as_cell(n), std::int64_t{k}, word, symbol, x, d});
        }
      }
    }
    return r;
  });

  ResultTable summary{"posterior_summary",
                      {"N", "k", "word", "symbol", "count", "alpha", "mean", "variance", "ci_low",
                       "ci_high"},
                      {}};
  ResultTable density{"marginal_density", {"N", "k", "word", "symbol", "x", "density"}, {}};
  for (const auto& p : points) {
    summary.rows.insert(summary.rows.end(), p.summary.begin(), p.summary.end());
    density.rows.insert(density.rows.end(), p.density.begin(), p.density.end());
  }
  return {std::move(summary), std::move(density)};
}

std::vector<ResultTable> run_compare(const ExperimentConfig& config) {
  const auto sweep = prepare(config);
  const auto a = sweep.source.alphabet().size();

  const auto points = parallel_map(sweep.grid.size(), config.jobs, [&](std::size_t i) {
    const auto n = sweep.grid[i];
    std::map<int, double> evidences;
    for (int k : sweep.orders) {
      evidences[k] = log_evidence(sweep.source.counts(n, k, config.max_entries),
                                  sweep.hyper.table(k, config.max_entries));
    }
    const auto uniform = compare_uniform(evidences);
    const auto penalized = compare_penalized(evidences, a);
    std::vector<std::vector<Cell>> rows;
    for (const auto& e : uniform.entries) {
      rows.push_back({as_cell(n), std::int64_t{e.order}, e.log_evidence, e.probability,
                      penalized.probability(e.order)});
    }
    return rows;
  });

  ResultTable table{"order_comparison",
                    {"N", "k", "log_evidence_nats", "prob_uniform", "prob_penalized"},
                    {}};
  for (const auto& rows : points) table.rows.insert(table.rows.end(), rows.begin(), rows.end());
  return {std::move(table)};
}

std::vector<ResultTable> run_entropy(const ExperimentConfig& config) {
  const auto sweep = prepare(config);
  const auto a = sweep.source.alphabet().size();
  const auto truth_rate = sweep.source.true_entropy_rate();

  // Order-k Markov approximations of the source serve as P for the divergence column.
  std::map<int, WordDistribution> truths;
  if (const auto* hmm = sweep.source.process()) {
    for (int k : sweep.orders) truths.emplace(k, markov_approximation(*hmm, k).dist);
  }

  struct PointResult {
    std::vector<std::vector<Cell>> rows;
    std::vector<Cell> weighted;
  };
  const auto points = parallel_map(sweep.grid.size(), config.jobs, [&](std::size_t i) {
    PointResult r;
    const auto n = sweep.grid[i];
    std::map<int, double> evidences;
    std::map<int, double> energies;
    for (int k : sweep.orders) {
      const auto counts = sweep.source.counts(n, k, config.max_entries);
      const auto hyper = sweep.hyper.table(k, config.max_entries);
      const auto q = q_from(counts, hyper);
      const auto stats = energy_stats(q, config.variance);
      evidences[k] = log_evidence(counts, hyper);
      energies[k] = stats.mean;
      Cell kl = std::string();
      if (const auto it = truths.find(k); it != truths.end()) kl = kl_of(q, it->second).bits;
      std::vector<Cell> row{as_cell(n),     std::int64_t{k}, stats.beta, stats.mean,
                            stats.variance, hmu_of(q.dist),  kl,         asymptotic_energy(q)};
      if (truth_rate) row.emplace_back(*truth_rate);
      r.rows.push_back(std::move(row));
    }
    const auto order_post = config.prior == OrderPriorKind::kUniform
                                ? compare_uniform(evidences)
                                : compare_penalized(evidences, a);
    r.weighted = {as_cell(n),
                  std::string(config.prior == OrderPriorKind::kUniform ? "uniform" : "penalty"),
                  std::int64_t{map_order(order_post)}, order_weighted_energy(order_post, energies)};
    if (truth_rate) r.weighted.emplace_back(*truth_rate);
    return r;
  });

  ResultTable table{"entropy_rate",
                    {"N", "k", "beta_k", "energy_mean_bits", "energy_var", "hmu_Q_bits",
                     "kl_bits_if_truth_known", "asymptotic_bits"},
                    {}};
  ResultTable weighted{"entropy_weighted", {"N", "prior", "map_order", "weighted_energy_bits"}, {}};
  if (truth_rate) {
    table.columns.push_back("true_hmu_bits");
    weighted.columns.push_back("true_hmu_bits");
  }
  for (const auto& p : points) {
    table.rows.insert(table.rows.end(), p.rows.begin(), p.rows.end());
    weighted.rows.push_back(p.weighted);
  }
  return {std::move(table), std::move(weighted)};
}

std::vector<std::filesystem::path> cmd_infer(const ExperimentConfig& config) {
  return write_all(run_infer(config), config.out_dir, config.format);
}

std::vector<std::filesystem::path> cmd_compare(const ExperimentConfig& config) {
  return write_all(run_compare(config), config.out_dir, config.format);
}

std::vector<std::filesystem::path> cmd_entropy(const ExperimentConfig& config) {
  return write_all(run_entropy(config), config.out_dir, config.format);
}

std::filesystem::path cmd_simulate(const SimulateConfig& config) {
  std::optional<LabeledHMM> hmm = builtin_process(config.source);
  std::string stem = config.source;
  if (!hmm) {
    if (std::filesystem::path(config.source).extension() != ".json") {
      throw ConfigError("unknown source \"" + config.source +
                        "\" (builtins: golden-mean, even, sns; or an HMM .json file)");
    }
    hmm = load_hmm_file(config.source);
    stem = std::filesystem::path(config.source).stem().string();
  }
  if (config.length == 0) throw ConfigError("--n must be positive");
  Rng rng(config.seed);
  const auto seq = sample_sequence(*hmm, static_cast<std::size_t>(config.length), rng);
  auto path = config.output;
  if (path.empty()) {
    std::filesystem::create_directories(config.out_dir);
    path = config.out_dir / (stem + "_N" + std::to_string(config.length) + "_seed" +
                             std::to_string(config.seed) + ".txt");
  } else if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  write_sequence_text(path, seq);
  return path;
}

const std::vector<int>& reproducible_figures() {
  static const std::vector<int> figures{2, 3, 4, 5, 6, 7, 8, 9, 10};
  return figures;
}

FigureRecipe figure_recipe(int figure, const ExperimentConfig& base) {
  FigureRecipe r{figure, "", base};
  auto& c = r.config;
  c.input.clear();
  c.mode = CountMode::kAverage;
  c.alpha = 1.0;
  c.fake_counts.clear();
  auto log_grid = [](std::uint64_t start, std::uint64_t stop) {
    NGrid g;
    g.start = start;
    g.stop = stop;
    g.step = 20;  // points per decade
    g.log = true;
    return g;
  };
  const char* sources[] = {"golden-mean", "even", "sns"};
  switch (figure) {
    case 2:
    case 5:
    case 8:
      r.command = "infer";
      c.source = sources[(figure - 2) / 3];
      c.k_min = c.k_max = 1;
      c.grid = NGrid{};
      c.grid->list = {100, 400, 1600, 6400};
      c.density_params = {"1:0", "0:1"};  // p(0|1) and p(1|0)
      break;
    case 3:
      r.command = "compare";
      c.source = "golden-mean";
      c.k_min = 1;
      c.k_max = 4;
      c.grid = NGrid{100, 1000, 5, false, {}};
      break;
    case 6:
      r.command = "compare";
      c.source = "even";
      c.k_min = 1;
      c.k_max = 4;
      c.grid = log_grid(100, 10000);
      break;
    case 9:
      r.command = "compare";
      c.source = "sns";
      c.k_min = 1;
      c.k_max = 4;
      c.grid = log_grid(100, 100000);
      break;
    case 4:
      r.command = "entropy";
      c.source = "golden-mean";
      c.k_min = 1;
      c.k_max = 4;
      c.grid = log_grid(100, 10000);
      break;
    case 7:
      r.command = "entropy";
      c.source = "even";
      c.k_min = 1;
      c.k_max = 6;
      c.grid = log_grid(100, 200000);
      break;
    case 10:
      r.command = "entropy";
      c.source = "sns";
      c.k_min = 1;
      c.k_max = 6;
      c.grid = log_grid(100, 100000);
      break;
    default:
      throw ConfigError("unknown figure id " + std::to_string(figure) +
                        " (known: 2, 3, 4, 5, 6, 7, 8, 9, 10)");
  }
  return r;
}

std::vector<std::filesystem::path> cmd_reproduce(int figure, const ExperimentConfig& base) {
  auto recipe = figure_recipe(figure, base);
  recipe.config.out_dir = base.out_dir / ("figure_" + std::to_string(figure));
  if (recipe.command == "infer") return cmd_infer(recipe.config);
  if (recipe.command == "compare") return cmd_compare(recipe.config);
  return cmd_entropy(recipe.config);
}

}  // namespace bayesmc::app
