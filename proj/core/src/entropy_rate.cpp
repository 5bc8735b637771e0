#include "bayesmc/entropy_rate.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bayesmc/error.hpp"
#include "bayesmc/special_functions.hpp"

namespace bayesmc {

namespace {

constexpr double kLn2 = std::numbers::ln2;

// Distribution from a positive table: word masses normalized by the grand
// total, conditionals by each word's row sum.
WordDistribution from_masses(const TableShape& shape, std::span<const double> masses,
                             double* grand_total) {
  const auto a = shape.alphabet_size();
  WordDistribution d{shape, std::vector<double>(shape.num_words()),
                     std::vector<double>(shape.num_entries())};
  double total = 0.0;
  for (std::size_t h = 0; h < shape.num_words(); ++h) {
    double row = 0.0;
    for (std::size_t s = 0; s < a; ++s) row += masses[h * a + s];
    d.word[h] = row;
    for (std::size_t s = 0; s < a; ++s) d.conditional[h * a + s] = masses[h * a + s] / row;
    total += row;
  }
  for (double& w : d.word) w /= total;
  if (grand_total != nullptr) *grand_total = total;
  return d;
}

}  // namespace

QDistribution q_from(const CountTable& counts, const HyperTable& hyper) {
  require_same_shape(counts.shape(), hyper.shape(), "q_from");
  const auto n = counts.values();
  const auto alpha = hyper.values();
  std::vector<double> masses(n.size());
  for (std::size_t i = 0; i < masses.size(); ++i) masses[i] = n[i] + alpha[i];
  QDistribution q{from_masses(counts.shape(), masses, nullptr), 0.0};
  q.beta = counts.total() + hyper.total();
  return q;
}

WordDistribution r_from(const HyperTable& hyper) {
  return from_masses(hyper.shape(), hyper.values(), nullptr);
}

WordDistribution uniform_distribution(const TableShape& shape) {
  return {shape, std::vector<double>(shape.num_words(), 1.0 / static_cast<double>(shape.num_words())),
          std::vector<double>(shape.num_entries(), 1.0 / static_cast<double>(shape.alphabet_size()))};
}

double hmu_of(const WordDistribution& dist) {
  const auto a = dist.shape.alphabet_size();
  double h = 0.0;
  for (std::size_t w = 0; w < dist.shape.num_words(); ++w) {
    double row = 0.0;
    for (std::size_t s = 0; s < a; ++s) {
      const double c = dist.conditional[w * a + s];
      if (c > 0.0) row -= c * std::log2(c);
    }
    h += dist.word[w] * row;
  }
  return h;
}

Divergence kl_of(const QDistribution& q, const WordDistribution& truth) {
  require_same_shape(q.dist.shape, truth.shape, "kl_of");
  const auto a = truth.shape.alphabet_size();
  double d = 0.0;
  for (std::size_t w = 0; w < truth.shape.num_words(); ++w) {
    const double qw = q.dist.word[w];
    if (qw == 0.0) continue;
    for (std::size_t s = 0; s < a; ++s) {
      const double qc = q.dist.conditional[w * a + s];
      if (qc == 0.0) continue;
      const double pc = truth.conditional[w * a + s];
      if (pc == 0.0) return {std::numeric_limits<double>::infinity(), false};
      d += qw * qc * std::log2(qc / pc);
    }
  }
  return {d, true};
}

double neg_log_partition(const WordDistribution& prior, double alpha_total,
                         const WordDistribution& q, double beta) {
  require_same_shape(prior.shape, q.shape, "neg_log_partition");
  const auto a = q.shape.alphabet_size();
  double total = 0.0;
  for (std::size_t h = 0; h < q.shape.num_words(); ++h) {
    const double rh = alpha_total * prior.word[h];
    const double qh = beta * q.word[h];
    total += log_gamma(qh) - log_gamma(rh);
    for (std::size_t s = 0; s < a; ++s) {
      total += log_gamma(rh * prior.conditional[h * a + s]) -
               log_gamma(qh * q.conditional[h * a + s]);
    }
  }
  return total;
}

double neg_log_partition(const CountTable& counts, const HyperTable& hyper) {
  const auto q = q_from(counts, hyper);
  return neg_log_partition(r_from(hyper), hyper.total(), q.dist, q.beta);
}

double expected_energy(const QDistribution& q) {
  const auto& d = q.dist;
  const auto a = d.shape.alphabet_size();
  double total = 0.0;
  for (std::size_t h = 0; h < d.shape.num_words(); ++h) {
    const double qh = d.word[h];
    if (!(q.beta * qh > 0.0)) throw DomainError("expected_energy: word with zero posterior mass");
    double row = qh * digamma(q.beta * qh);
    for (std::size_t s = 0; s < a; ++s) {
      const double qhs = qh * d.conditional[h * a + s];
      if (!(q.beta * qhs > 0.0)) throw DomainError("expected_energy: entry with zero posterior mass");
      row -= qhs * digamma(q.beta * qhs);
    }
    total += row;
  }
  return total / kLn2;
}

double energy_variance(const QDistribution& q, VariancePrefactor prefactor) {
  const auto& d = q.dist;
  const auto a = d.shape.alphabet_size();
  double total = 0.0;
  for (std::size_t h = 0; h < d.shape.num_words(); ++h) {
    const double qh = d.word[h];
    if (!(q.beta * qh > 0.0)) throw DomainError("energy_variance: word with zero posterior mass");
    double row = -qh * qh * trigamma(q.beta * qh);
    for (std::size_t s = 0; s < a; ++s) {
      const double qhs = qh * d.conditional[h * a + s];
      if (!(q.beta * qhs > 0.0)) throw DomainError("energy_variance: entry with zero posterior mass");
      row += qhs * qhs * trigamma(q.beta * qhs);
    }
    total += row;
  }
  return prefactor == VariancePrefactor::kInverseLn2 ? total / kLn2 : total / (kLn2 * kLn2);
}

double asymptotic_energy(const QDistribution& q) {
  const auto& shape = q.dist.shape;
  const double params = static_cast<double>(shape.num_words()) *
                        static_cast<double>(shape.alphabet_size() - 1);
  return hmu_of(q.dist) + params / (2.0 * q.beta * kLn2);
}

EnergyStats energy_stats(const QDistribution& q, VariancePrefactor prefactor) {
  return {q.dist.shape.order(), q.beta, expected_energy(q), energy_variance(q, prefactor)};
}

double order_weighted_energy(const OrderPosterior& posterior,
                             const std::map<int, double>& energy_by_order) {
  double total = 0.0;
  for (const auto& e : posterior.entries) {
    const auto it = energy_by_order.find(e.order);
    if (it == energy_by_order.end()) {
      throw DomainError("no energy given for order " + std::to_string(e.order));
    }
    total += e.probability * it->second;
  }
  return total;
}

}  // namespace bayesmc
