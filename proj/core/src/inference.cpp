#include "bayesmc/inference.hpp"

#include <cmath>
#include <string>

#include "bayesmc/error.hpp"

namespace bayesmc {

DirichletPosterior::DirichletPosterior(TableShape shape, std::vector<double> params)
    : shape_(shape), params_(std::move(params)) {
  if (params_.size() != shape_.num_entries()) {
    throw ShapeError("posterior parameter table has " + std::to_string(params_.size()) +
                     " entries, expected " + std::to_string(shape_.num_entries()));
  }
  const auto a = shape_.alphabet_size();
  word_sums_.assign(shape_.num_words(), 0.0);
  for (std::size_t h = 0; h < word_sums_.size(); ++h) {
    for (std::size_t s = 0; s < a; ++s) {
      const double v = params_[h * a + s];
      if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError("posterior parameters must be positive, got " + std::to_string(v));
      }
      word_sums_[h] += v;
    }
  }
}

double DirichletPosterior::param(std::uint64_t word, Symbol s) const {
  return params_[shape_.index(word, s)];
}

double DirichletPosterior::word_sum(std::uint64_t word) const {
  shape_.index(word, 0);
  return word_sums_[word];
}

DirichletPosterior posterior(const CountTable& counts, const HyperTable& hyper) {
  require_same_shape(counts.shape(), hyper.shape(), "posterior");
  const auto n = counts.values();
  const auto alpha = hyper.values();
  std::vector<double> params(n.size());
  for (std::size_t i = 0; i < params.size(); ++i) params[i] = n[i] + alpha[i];
  return DirichletPosterior(counts.shape(), std::move(params));
}

double posterior_mean(const DirichletPosterior& post, std::uint64_t word, Symbol s) {
  return post.param(word, s) / post.word_sum(word);
}

double posterior_variance(const DirichletPosterior& post, std::uint64_t word, Symbol s) {
  return marginal(post, word, s).variance();
}

Moments prior_moments(const HyperTable& hyper, std::uint64_t word, Symbol s) {
  const double a = hyper(word, s);
  const double total = hyper.word_sum(word);
  return {a / total, a * (total - a) / (total * total * (1.0 + total))};
}

MarginalBeta marginal(const DirichletPosterior& post, std::uint64_t word, Symbol s) {
  const double a = post.param(word, s);
  return {word, s, BetaParams(a, post.word_sum(word) - a)};
}

ConfidenceRegion confidence_region(const MarginalBeta& m, double level) {
  if (!(level > 0.0 && level < 1.0)) {
    throw DomainError("confidence level must lie in (0,1), got " + std::to_string(level));
  }
  return {level, inv_reg_inc_beta(m.beta, 0.5 * (1.0 - level)),
          inv_reg_inc_beta(m.beta, 0.5 * (1.0 + level))};
}

double log_evidence(const CountTable& counts, const HyperTable& hyper) {
  require_same_shape(counts.shape(), hyper.shape(), "log_evidence");
  const auto a = counts.alphabet_size();
  const auto n = counts.values();
  const auto alpha = hyper.values();
  double total = 0.0;
  for (std::size_t h = 0; h < counts.shape().num_words(); ++h) {
    const double n_h = counts.word_total(h);
    if (n_h == 0.0) continue;  // the word's factor is exactly 1
    const double alpha_h = hyper.word_sum(h);
    double term = log_gamma(alpha_h) - log_gamma(n_h + alpha_h);
    for (std::size_t s = 0; s < a; ++s) {
      const std::size_t i = h * a + s;
      if (n[i] > 0.0) term += log_gamma(n[i] + alpha[i]) - log_gamma(alpha[i]);
    }
    total += term;
  }
  return total;
}

double log_predictive(const CountTable& counts, const CountTable& new_counts,
                      const HyperTable& hyper) {
  require_same_shape(counts.shape(), hyper.shape(), "log_predictive");
  require_same_shape(new_counts.shape(), hyper.shape(), "log_predictive");
  const auto a = counts.alphabet_size();
  const auto n = counts.values();
  const auto m = new_counts.values();
  const auto alpha = hyper.values();
  double total = 0.0;
  for (std::size_t h = 0; h < counts.shape().num_words(); ++h) {
    const double m_h = new_counts.word_total(h);
    if (m_h == 0.0) continue;
    const double base = counts.word_total(h) + hyper.word_sum(h);
    double term = log_gamma(base) - log_gamma(base + m_h);
    for (std::size_t s = 0; s < a; ++s) {
      const std::size_t i = h * a + s;
      if (m[i] > 0.0) term += log_gamma(n[i] + m[i] + alpha[i]) - log_gamma(n[i] + alpha[i]);
    }
    total += term;
  }
  return total;
}

TransitionTable sample_posterior(const DirichletPosterior& post, Rng& rng) {
  const auto& shape = post.shape();
  const auto a = shape.alphabet_size();
  const auto params = post.params();
  TransitionTable out{shape, std::vector<double>(shape.num_entries())};
  for (std::size_t h = 0; h < shape.num_words(); ++h) {
    double sum = 0.0;
    for (std::size_t s = 0; s < a; ++s) {
      const double g = rng.gamma(params[h * a + s]);
      out.probs[h * a + s] = g;
      sum += g;
    }
    for (std::size_t s = 0; s < a; ++s) out.probs[h * a + s] /= sum;
  }
  return out;
}

std::vector<PosteriorSummaryRow> summarize_posterior(const CountTable& counts,
                                                     const HyperTable& hyper,
                                                     const Alphabet& alphabet,
                                                     double confidence) {
  if (alphabet.size() != counts.alphabet_size()) {
    throw ShapeError("alphabet size does not match the count table");
  }
  const auto post = posterior(counts, hyper);
  const auto& shape = counts.shape();
  std::vector<PosteriorSummaryRow> rows;
  rows.reserve(shape.num_entries());
  for (std::uint64_t h = 0; h < shape.num_words(); ++h) {
    const auto word = word_string({shape.order(), h}, alphabet);
    for (std::size_t j = 0; j < shape.alphabet_size(); ++j) {
      const auto s = static_cast<Symbol>(j);
      const auto m = marginal(post, h, s);
      const auto region = confidence_region(m, confidence);
      rows.push_back({word, alphabet.symbol(s), counts(h, s), hyper(h, s), posterior_mean(post, h, s),
                      posterior_variance(post, h, s), region.lower, region.upper});
    }
  }
  return rows;
}

std::vector<std::pair<double, double>> density_grid(const MarginalBeta& m, std::size_t points) {
  if (points == 0) throw DomainError("density grid needs at least one point");
  std::vector<std::pair<double, double>> grid;
  grid.reserve(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double x = (static_cast<double>(i) + 0.5) / static_cast<double>(points);
    grid.emplace_back(x, m.density(x));
  }
  return grid;
}

}  // namespace bayesmc
