#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/output.hpp"

namespace bayesmc::app {

// Each run_* computes its result tables without touching the filesystem
// (except to read inputs); each cmd_* writes them under config.out_dir.

/// posterior_summary: N,k,word,symbol,count,alpha,mean,variance,ci_low,ci_high
/// marginal_density:  N,k,word,symbol,x,density
std::vector<ResultTable> run_infer(const ExperimentConfig& config);

/// order_comparison: N,k,log_evidence_nats,prob_uniform,prob_penalized
std::vector<ResultTable> run_compare(const ExperimentConfig& config);

/// entropy_rate: N,k,beta_k,energy_mean_bits,energy_var,hmu_Q_bits,
///   kl_bits_if_truth_known,asymptotic_bits[,true_hmu_bits]
/// entropy_weighted: N,prior,map_order,weighted_energy_bits[,true_hmu_bits]
std::vector<ResultTable> run_entropy(const ExperimentConfig& config);

std::vector<std::filesystem::path> cmd_infer(const ExperimentConfig& config);
std::vector<std::filesystem::path> cmd_compare(const ExperimentConfig& config);
std::vector<std::filesystem::path> cmd_entropy(const ExperimentConfig& config);

struct SimulateConfig {
  std::string source;  ///< builtin name or HMM JSON path
  std::uint64_t length = 1000;
  std::uint64_t seed = 0;
  std::filesystem::path output;  ///< empty: <out_dir>/<source>_N<length>_seed<seed>.txt
  std::filesystem::path out_dir = ".";
};

std::filesystem::path cmd_simulate(const SimulateConfig& config);

/// Figures with a reproduction recipe.
const std::vector<int>& reproducible_figures();

/// Experiment settings used for a figure (source, orders, N grid, command).
struct FigureRecipe {
  int figure;
  std::string command;  ///< "infer", "compare" or "entropy"
  ExperimentConfig config;
};

/// Throws ConfigError for unknown ids. `base` supplies out_dir, jobs, format.
FigureRecipe figure_recipe(int figure, const ExperimentConfig& base);

/// Writes the figure's tables under <out_dir>/figure_<id>/.
std::vector<std::filesystem::path> cmd_reproduce(int figure, const ExperimentConfig& base);

}  // namespace bayesmc::app
