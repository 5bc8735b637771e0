#pragma once

#include <map>

#include "bayesmc/counts.hpp"
#include "bayesmc/model_comparison.hpp"

namespace bayesmc {

/// Posterior-mean distribution Q with total mass
/// beta_k = sum_{h,s} (n(h^k s) + alpha(h^k s)).
///   q(h)   = (n(h) + alpha(h)) / beta_k
///   q(s|h) = (n(h s) + alpha(h s)) / (n(h) + alpha(h))
struct QDistribution {
  WordDistribution dist;
  double beta;
};

QDistribution q_from(const CountTable& counts, const HyperTable& hyper);

/// Prior distribution R: r(h) = alpha(h) / alpha_k, r(s|h) = alpha(h s) / alpha(h).
WordDistribution r_from(const HyperTable& hyper);

/// u(h) = |A|^-k, u(s|h) = 1/|A|.
WordDistribution uniform_distribution(const TableShape& shape);

/// Conditional entropy -sum q(h) q(s|h) log2 q(s|h) in bits/symbol,
/// with 0 log 0 = 0.
double hmu_of(const WordDistribution& dist);

struct Divergence {
  double bits;  ///< +inf when not finite
  bool finite;
};

/// D[Q||P] = sum q(h) q(s|h) log2(q(s|h) / p(s|h)) in bits/symbol, using
/// the conditionals of `truth`. Infinite when q > 0 where p = 0.
Divergence kl_of(const QDistribution& q, const WordDistribution& truth);

/// -ln Z written through R and Q: sum lnG(alpha_k r r) - sum lnG(alpha_k r)
/// + sum lnG(beta q) - sum lnG(beta q q).
double neg_log_partition(const CountTable& counts, const HyperTable& hyper);

/// Same expression with Q held fixed and the mass set to `beta`; at the
/// natural beta_k it equals the evidence route exactly.
double neg_log_partition(const WordDistribution& prior, double alpha_total,
                         const WordDistribution& q, double beta);

/// Posterior average of E(Q,P) = D[Q||P] + h_mu[Q] in bits/symbol:
/// (1/ln2) [ sum_h q(h) psi(beta q(h)) - sum_{h,s} q(h)q(s|h) psi(beta q(h)q(s|h)) ].
double expected_energy(const QDistribution& q);

/// Prefactor applied to the second beta-derivative of ln Z.
enum class VariancePrefactor {
  kInverseLn2,         ///< 1/ln2, the published form (default)
  kInverseLn2Squared,  ///< 1/(ln2)^2, the bits^2 scaling of a second derivative
};

/// (1/ln2) [ sum q(h)^2 q(s|h)^2 psi1(beta q(h)q(s|h)) - sum q(h)^2 psi1(beta q(h)) ].
double energy_variance(const QDistribution& q,
                       VariancePrefactor prefactor = VariancePrefactor::kInverseLn2);

/// Large-beta form h_mu[Q] + |A|^k (|A|-1) / (2 beta_k ln2); the remainder is
/// O(1/beta_k^2).
double asymptotic_energy(const QDistribution& q);

struct EnergyStats {
  int order;
  double beta;
  double mean;      ///< bits/symbol
  double variance;  ///< see VariancePrefactor
};

EnergyStats energy_stats(const QDistribution& q,
                         VariancePrefactor prefactor = VariancePrefactor::kInverseLn2);

/// Entropy-rate estimate mixing per-order energies by order probability.
/// Throws DomainError if an order of the posterior has no energy.
double order_weighted_energy(const OrderPosterior& posterior,
                             const std::map<int, double>& energy_by_order);

}  // namespace bayesmc
