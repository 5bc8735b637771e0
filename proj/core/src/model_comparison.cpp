#include "bayesmc/model_comparison.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bayesmc/error.hpp"

namespace bayesmc {

OrderRange::OrderRange(int k_min_, int k_max_) : k_min(k_min_), k_max(k_max_) {
  if (k_min < 1 || k_max < k_min) {
    throw ConfigError("order range needs 1 <= k_min <= k_max, got [" + std::to_string(k_min) +
                      ", " + std::to_string(k_max) + "]");
  }
}

double OrderPosterior::probability(int order) const { return at(order).probability; }

const OrderEntry& OrderPosterior::at(int order) const {
  for (const auto& e : entries) {
    if (e.order == order) return e;
  }
  throw DomainError("order " + std::to_string(order) + " not in the posterior");
}

std::uint64_t free_params(int order, std::size_t alphabet_size) {
  if (order < 1) throw DomainError("free_params needs k >= 1, got " + std::to_string(order));
  if (alphabet_size < 2) throw DomainError("alphabet size must be at least 2");
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = alphabet_size - 1;
  for (int i = 0; i < order; ++i) {
    if (count > kMax / alphabet_size) {
      throw DomainError("parameter count |A|^k(|A|-1) overflows for k=" + std::to_string(order));
    }
    count *= alphabet_size;
  }
  return count;
}

double log_sum_exp(const std::vector<double>& xs) {
  double peak = -std::numeric_limits<double>::infinity();
  for (double x : xs) peak = std::max(peak, x);
  if (!std::isfinite(peak)) return peak;
  double sum = 0.0;
  for (double x : xs) sum += std::exp(x - peak);
  return peak + std::log(sum);
}

namespace {

OrderPosterior normalize(const std::map<int, double>& log_evidences,
                         const std::vector<double>& log_prior_unnormalized) {
  std::vector<double> joint;
  joint.reserve(log_evidences.size());
  std::size_t i = 0;
  for (const auto& [k, ev] : log_evidences) joint.push_back(ev + log_prior_unnormalized[i++]);
  const double log_norm = log_sum_exp(joint);
  const double log_prior_norm = log_sum_exp(log_prior_unnormalized);
  if (!std::isfinite(log_norm)) throw DomainError("order posterior normalization is not finite");

  OrderPosterior out;
  i = 0;
  for (const auto& [k, ev] : log_evidences) {
    const double lp = joint[i] - log_norm;
    out.entries.push_back({k, ev, log_prior_unnormalized[i] - log_prior_norm, lp, std::exp(lp)});
    ++i;
  }
  return out;
}

void require_nonempty(const std::map<int, double>& log_evidences) {
  if (log_evidences.empty()) throw DomainError("model comparison needs at least one order");
}

}  // namespace

OrderPosterior compare_uniform(const std::map<int, double>& log_evidences) {
  require_nonempty(log_evidences);
  return normalize(log_evidences, std::vector<double>(log_evidences.size(), 0.0));
}

OrderPosterior compare_penalized(const std::map<int, double>& log_evidences,
                                 std::size_t alphabet_size) {
  require_nonempty(log_evidences);
  std::vector<double> log_prior;
  log_prior.reserve(log_evidences.size());
  for (const auto& [k, ev] : log_evidences) {
    log_prior.push_back(-static_cast<double>(free_params(k, alphabet_size)));
  }
  return normalize(log_evidences, log_prior);
}

int map_order(const OrderPosterior& posterior) {
  if (posterior.entries.empty()) throw DomainError("map_order of an empty posterior");
  const OrderEntry* best = &posterior.entries.front();
  for (const auto& e : posterior.entries) {
    if (e.probability > best->probability + 1e-12 ||
        (std::fabs(e.probability - best->probability) <= 1e-12 && e.order < best->order)) {
      best = &e;
    }
  }
  return best->order;
}

}  // namespace bayesmc
