#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace bayesmc {

struct OrderRange {
  OrderRange(int k_min, int k_max);

  int k_min;
  int k_max;
};

struct OrderEntry {
  int order;
  double log_evidence;      ///< nats
  double log_prior_weight;  ///< normalized ln P(M_k | M)
  double log_probability;   ///< normalized ln P(M_k | D, M)
  double probability;
};

/// Probability over candidate orders, ascending in k.
struct OrderPosterior {
  std::vector<OrderEntry> entries;

  double probability(int order) const;
  const OrderEntry& at(int order) const;
};

/// |M_k| = |A|^k (|A| - 1). Throws DomainError on overflow or k < 1.
std::uint64_t free_params(int order, std::size_t alphabet_size);

/// ln sum_i exp(x_i); -inf for an empty or all -inf input.
double log_sum_exp(const std::vector<double>& xs);

/// P(M_k|D) proportional to the evidence. Throws DomainError when empty.
OrderPosterior compare_uniform(const std::map<int, double>& log_evidences);

/// P(M_k|D) proportional to the evidence times exp(-|M_k|).
OrderPosterior compare_penalized(const std::map<int, double>& log_evidences,
                                 std::size_t alphabet_size);

/// Most probable order; ties within 1e-12 go to the smallest k.
int map_order(const OrderPosterior& posterior);

}  // namespace bayesmc
