// bayesmc: Bayesian inference of k-th order Markov chains from symbol data.

#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>

#include "bayesmc/error.hpp"
#include "cli/commands.hpp"

namespace {

using namespace bayesmc;
using namespace bayesmc::app;

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

int report(int code, const std::string& kind, const std::string& message) {
  nlohmann::json record{{"error", kind}, {"exit_code", code}, {"message", message}};
  std::cerr << record.dump() << '\n';
  return code;
}

struct GridFlags {
  std::uint64_t start = 100;
  std::uint64_t stop = 1000;
  std::uint64_t step = 5;
  std::string scale = "linear";
  std::vector<std::uint64_t> list;
};

void add_experiment_flags(CLI::App* cmd, ExperimentConfig& c, GridFlags& g, std::string& prior,
                          std::string& format, std::string& mode, std::string& variance,
                          std::uint64_t& seed) {
  cmd->add_option("--source", c.source, "Builtin process (golden-mean, even, sns) or HMM .json file");
  cmd->add_option("--input", c.input, "Sequence file: plain text symbols or .csv");
  cmd->add_option("--column", c.column, "CSV column name or zero-based index");
  cmd->add_option("--alphabet", c.alphabet, "Symbols in index order (default: inferred, sorted)");
  cmd->add_option("--mode", mode, "Counts from a process: average or sample")
      ->check(CLI::IsMember({"average", "sample"}));
  cmd->add_option("--seed", seed, "Seed for --mode sample");
  cmd->add_option("--k-min", c.k_min, "Smallest order")->capture_default_str();
  cmd->add_option("--k-max", c.k_max, "Largest order")->capture_default_str();
  cmd->add_option("--n-start", g.start, "First N of the grid")->capture_default_str();
  cmd->add_option("--n-stop", g.stop, "Last N of the grid")->capture_default_str();
  cmd->add_option("--n-step", g.step, "Linear step, or points per decade with --n-scale log")
      ->capture_default_str();
  cmd->add_option("--n-scale", g.scale, "Grid spacing: linear or log")
      ->check(CLI::IsMember({"linear", "log"}));
  cmd->add_option("--n-list", g.list, "Explicit N values (overrides start/stop/step)")->delimiter(',');
  auto* alpha = cmd->add_option("--alpha", c.alpha, "Uniform hyperparameter value")->capture_default_str();
  cmd->add_option("--fake-counts", c.fake_counts, "CSV word,symbol,count of fake counts (alpha = count + 1)")
      ->excludes(alpha);
  cmd->add_option("--prior", prior, "Prior over orders for weighted estimates: uniform or penalty")
      ->check(CLI::IsMember({"uniform", "penalty"}));
  cmd->add_option("--confidence", c.confidence, "Confidence level of posterior regions")->capture_default_str();
  cmd->add_option("--density-points", c.density_points, "Marginal density grid resolution")
      ->capture_default_str();
  cmd->add_option("--density-param", c.density_params, "Parameter word:symbol to export densities for");
  cmd->add_option("--variance-prefactor", variance, "Energy variance prefactor: ln2 or ln2-squared")
      ->check(CLI::IsMember({"ln2", "ln2-squared"}));
  cmd->add_option("--max-entries", c.max_entries, "Cap on |A|^(k+1) table entries")->capture_default_str();
  cmd->add_option("--out", c.out_dir, "Output directory (default $BAYESMC_OUT_DIR or .)");
  cmd->add_option("--format", format, "Output format: csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--jobs", c.jobs, "Worker threads")->capture_default_str();
}

void finish_config(CLI::App* cmd, ExperimentConfig& c, const GridFlags& g, const std::string& prior,
                   const std::string& format, const std::string& mode, const std::string& variance,
                   std::uint64_t seed) {
  const bool grid_given = cmd->count("--n-start") + cmd->count("--n-stop") + cmd->count("--n-step") +
                              cmd->count("--n-scale") + cmd->count("--n-list") > 0;
  if (grid_given || c.input.empty()) {
    c.grid = NGrid{g.start, g.stop, g.step, g.scale == "log", g.list};
  }
  c.prior = prior == "penalty" ? OrderPriorKind::kPenalty : OrderPriorKind::kUniform;
  c.format = format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
  c.mode = mode == "sample" ? CountMode::kSample : CountMode::kAverage;
  c.variance = variance == "ln2-squared" ? VariancePrefactor::kInverseLn2Squared
                                         : VariancePrefactor::kInverseLn2;
  if (cmd->count("--seed") > 0) c.seed = seed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bayesian inference of k-th order Markov chains: parameters, order comparison, "
               "entropy rates"};
  app.require_subcommand(1);

  ExperimentConfig config;
  config.out_dir = default_out_dir();
  config.jobs = default_jobs();
  GridFlags grid;
  std::string prior = "uniform";
  std::string format = "csv";
  std::string mode = "average";
  std::string variance = "ln2";
  std::uint64_t seed = 0;

  std::map<std::string, CLI::App*> experiments;
  for (const auto& [name, help] :
       std::vector<std::pair<std::string, std::string>>{
           {"infer", "Posterior summaries and marginal densities for each order"},
           {"compare", "Order comparison under uniform and penalty priors"},
           {"entropy", "Entropy-rate estimates from partition-function derivatives"}}) {
    auto* cmd = app.add_subcommand(name, help);
    add_experiment_flags(cmd, config, grid, prior, format, mode, variance, seed);
    experiments[name] = cmd;
  }

  SimulateConfig sim;
  sim.out_dir = config.out_dir;
  auto* simulate = app.add_subcommand("simulate", "Write a seeded realization of a process");
  simulate->add_option("--source", sim.source, "Builtin process or HMM .json file")->required();
  simulate->add_option("--n", sim.length, "Sequence length")->required();
  simulate->add_option("--seed", sim.seed, "Random seed")->required();
  simulate->add_option("--output", sim.output, "Output file");
  simulate->add_option("--out", sim.out_dir, "Output directory when --output is not given");

  int figure = 0;
  auto* reproduce = app.add_subcommand("reproduce", "Regenerate the CSV bundle behind a figure");
  reproduce->add_option("--figure", figure, "Figure id: 2-10")->required();
  reproduce->add_option("--out", config.out_dir, "Output directory");
  reproduce->add_option("--format", format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  reproduce->add_option("--jobs", config.jobs, "Worker threads");
  reproduce->add_option("--confidence", config.confidence, "Confidence level of posterior regions");
  reproduce->add_option("--density-points", config.density_points, "Marginal density grid resolution");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return report(kExitConfig, "invalid_config", e.what());
  }

  try {
    std::vector<std::filesystem::path> written;
    for (const auto& [name, cmd] : experiments) {
      if (!cmd->parsed()) continue;
      finish_config(cmd, config, grid, prior, format, mode, variance, seed);
      if (name == "infer") written = cmd_infer(config);
      if (name == "compare") written = cmd_compare(config);
      if (name == "entropy") written = cmd_entropy(config);
    }
    if (simulate->parsed()) written.push_back(cmd_simulate(sim));
    if (reproduce->parsed()) {
      config.format = format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
      written = cmd_reproduce(figure, config);
    }
    for (const auto& p : written) std::cout << p.string() << '\n';
  } catch (const DomainError& e) {
    return report(kExitNumeric, "numeric_domain", e.what());
  } catch (const Error& e) {
    return report(kExitConfig, "invalid_config", e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return report(kExitConfig, "invalid_config", e.what());
  }
  return 0;
}
