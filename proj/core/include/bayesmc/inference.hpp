#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bayesmc/counts.hpp"
#include "bayesmc/random.hpp"
#include "bayesmc/special_functions.hpp"

namespace bayesmc {

/// Posterior over order-k transition parameters: a product of Dirichlet
/// distributions, one per word, with parameters n(h^k s) + alpha(h^k s).
class DirichletPosterior {
 public:
  DirichletPosterior(TableShape shape, std::vector<double> params);

  const TableShape& shape() const noexcept { return shape_; }
  double param(std::uint64_t word, Symbol s) const;
  /// n(h^k) + alpha(h^k).
  double word_sum(std::uint64_t word) const;
  std::span<const double> params() const noexcept { return params_; }

 private:
  TableShape shape_;
  std::vector<double> params_;
  std::vector<double> word_sums_;
};

struct Moments {
  double mean;
  double variance;
};

/// Beta marginal of a single parameter p(s|h^k).
struct MarginalBeta {
  std::uint64_t word;
  Symbol symbol;
  BetaParams beta;

  double mean() const noexcept { return beta.mean(); }
  double variance() const noexcept { return beta.variance(); }
  double density(double x) const { return beta_pdf(beta, x); }
};

/// Equal-tail central region holding `level` of the marginal's mass.
struct ConfidenceRegion {
  double level;
  double lower;
  double upper;
};

/// Throws ShapeError if the tables disagree on order or alphabet.
DirichletPosterior posterior(const CountTable& counts, const HyperTable& hyper);

/// (n + alpha) / (n(h) + alpha(h)).
double posterior_mean(const DirichletPosterior& post, std::uint64_t word, Symbol s);
double posterior_variance(const DirichletPosterior& post, std::uint64_t word, Symbol s);
Moments prior_moments(const HyperTable& hyper, std::uint64_t word, Symbol s);
MarginalBeta marginal(const DirichletPosterior& post, std::uint64_t word, Symbol s);

/// Throws DomainError unless 0 < level < 1.
ConfidenceRegion confidence_region(const MarginalBeta& m, double level);

/// Natural log of the evidence P(D|M_k); every word contributes, observed or not.
double log_evidence(const CountTable& counts, const HyperTable& hyper);

/// ln P(D_new | D, M_k) for new-data counts m(h^k s).
double log_predictive(const CountTable& counts, const CountTable& new_counts,
                      const HyperTable& hyper);

/// One draw of every p(s|h^k) from the posterior. Each word's row is a
/// normalized vector of independent Gamma draws.
TransitionTable sample_posterior(const DirichletPosterior& post, Rng& rng);

/// Row of a posterior summary export.
struct PosteriorSummaryRow {
  std::string word;
  char symbol;
  double count;
  double alpha;
  double mean;
  double variance;
  double ci_low;
  double ci_high;
};

std::vector<PosteriorSummaryRow> summarize_posterior(const CountTable& counts,
                                                     const HyperTable& hyper,
                                                     const Alphabet& alphabet,
                                                     double confidence);

inline constexpr std::size_t kDefaultDensityPoints = 512;

/// Marginal density on `points` cell-centred abscissae x_i = (i + 1/2) / points,
/// which keeps every value finite when a < 1 or b < 1.
std::vector<std::pair<double, double>> density_grid(const MarginalBeta& m,
                                                    std::size_t points = kDefaultDensityPoints);

}  // namespace bayesmc
