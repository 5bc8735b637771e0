#include "bayesmc/processes.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "bayesmc/error.hpp"

namespace bayesmc {

namespace {

constexpr double kRowSumTolerance = 1e-12;

std::string fmt_state(std::size_t v) { return std::to_string(v); }

// States reachable from `start` along edges with T > 0 (forward or reversed).
std::vector<bool> reachable(const LabeledHMM& hmm, std::size_t start, bool reversed) {
  const auto n = hmm.num_states();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      const double w = reversed ? hmm.total_transition(v, u) : hmm.total_transition(u, v);
      if (w > 0.0 && !seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

void require_order(int order) {
  if (order < 0) throw DomainError("word length must be nonnegative, got " + std::to_string(order));
}

}  // namespace

LabeledHMM::LabeledHMM(Alphabet alphabet, std::size_t num_states,
                       std::vector<std::vector<double>> matrices)
    : alphabet_(std::move(alphabet)), num_states_(num_states), matrices_(std::move(matrices)) {
  if (num_states_ == 0) throw ConfigError("HMM needs at least one state");
  if (matrices_.size() != alphabet_.size()) {
    throw ConfigError("HMM has " + std::to_string(matrices_.size()) +
                      " labeled matrices but the alphabet has " +
                      std::to_string(alphabet_.size()) + " symbols");
  }
  for (std::size_t s = 0; s < matrices_.size(); ++s) {
    if (matrices_[s].size() != num_states_ * num_states_) {
      throw ConfigError(std::string("labeled matrix for symbol '") + alphabet_.symbol(static_cast<Symbol>(s)) +
                        "' is not " + std::to_string(num_states_) + "x" +
                        std::to_string(num_states_));
    }
    for (double v : matrices_[s]) {
      if (!(v >= 0.0) || !std::isfinite(v)) {
        throw ConfigError(std::string("negativity: labeled matrix for symbol '") +
                          alphabet_.symbol(static_cast<Symbol>(s)) +
                          "' has a negative or non-finite entry " + std::to_string(v));
      }
    }
  }
  for (std::size_t u = 0; u < num_states_; ++u) {
    double row = 0.0;
    for (std::size_t v = 0; v < num_states_; ++v) row += total_transition(u, v);
    if (std::fabs(row - 1.0) > kRowSumTolerance) {
      throw ConfigError("row sums: row " + fmt_state(u) + " of T = sum_s T^(s) sums to " +
                        std::to_string(row) + ", not 1");
    }
  }
}

double LabeledHMM::transition(Symbol s, std::size_t from, std::size_t to) const {
  return matrices_.at(s).at(from * num_states_ + to);
}

double LabeledHMM::total_transition(std::size_t from, std::size_t to) const {
  double t = 0.0;
  for (const auto& m : matrices_) t += m[from * num_states_ + to];
  return t;
}

LabeledHMM golden_mean() {
  return LabeledHMM(Alphabet::binary(), 2,
                    {{0.0, 0.5,  //
                      0.0, 0.0},
                     {0.5, 0.0,  //
                      1.0, 0.0}});
}

LabeledHMM even_process() {
  return LabeledHMM(Alphabet::binary(), 2,
                    {{0.5, 0.0,  //
                      0.0, 0.0},
                     {0.0, 0.5,  //
                      1.0, 0.0}});
}

LabeledHMM sns() {
  return LabeledHMM(Alphabet::binary(), 2,
                    {{0.0, 0.0,  //
                      0.5, 0.0},
                     {0.5, 0.5,  //
                      0.0, 0.5}});
}

std::optional<LabeledHMM> builtin_process(std::string_view name) {
  if (name == "golden-mean") return golden_mean();
  if (name == "even") return even_process();
  if (name == "sns") return sns();
  return std::nullopt;
}

std::optional<double> builtin_entropy_rate(std::string_view name) {
  if (name == "golden-mean" || name == "even") return 2.0 / 3.0;
  if (name == "sns") return kSnsEntropyRate;
  return std::nullopt;
}

StationaryDist stationary(const LabeledHMM& hmm) {
  const auto n = hmm.num_states();
  const auto forward = reachable(hmm, 0, false);
  const auto backward = reachable(hmm, 0, true);
  for (std::size_t v = 0; v < n; ++v) {
    if (!forward[v] || !backward[v]) {
      throw ConfigError("stationary: T is reducible (state " + fmt_state(v) +
                        " is not mutually reachable with state 0)");
    }
  }
  // pi (T - I) = 0 with the last balance equation replaced by sum(pi) = 1.
  Eigen::MatrixXd system(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      system(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          hmm.total_transition(j, i) - (i == j ? 1.0 : 0.0);
    }
  }
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  system.row(static_cast<Eigen::Index>(n - 1)).setOnes();
  rhs(static_cast<Eigen::Index>(n - 1)) = 1.0;
  const Eigen::VectorXd pi = system.fullPivLu().solve(rhs);
  StationaryDist out{std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.pi[i] = std::max(0.0, pi(static_cast<Eigen::Index>(i)));
  }
  return out;
}

double word_probability(const LabeledHMM& hmm, std::span<const Symbol> word) {
  const auto n = hmm.num_states();
  auto v = stationary(hmm).pi;
  std::vector<double> next(n);
  for (Symbol s : word) {
    if (s >= hmm.alphabet().size()) {
      throw DomainError("symbol index " + std::to_string(s) + " outside the process alphabet");
    }
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t u = 0; u < n; ++u) {
      if (v[u] == 0.0) continue;
      for (std::size_t w = 0; w < n; ++w) next[w] += v[u] * hmm.transition(s, u, w);
    }
    v.swap(next);
  }
  double p = 0.0;
  for (double x : v) p += x;
  return p;
}

std::vector<double> word_probabilities(const LabeledHMM& hmm, int length) {
  require_order(length);
  const auto n = hmm.num_states();
  const auto a = hmm.alphabet().size();
  // Forward vectors pi T^(w) for every word of the current length, laid out
  // word-major; extending by one symbol appends it as the least significant digit.
  std::vector<double> forward = stationary(hmm).pi;
  std::size_t words = 1;
  for (int l = 0; l < length; ++l) {
    std::vector<double> next(words * a * n, 0.0);
    for (std::size_t w = 0; w < words; ++w) {
      const double* v = &forward[w * n];
      for (std::size_t s = 0; s < a; ++s) {
        double* out = &next[(w * a + s) * n];
        for (std::size_t u = 0; u < n; ++u) {
          if (v[u] == 0.0) continue;
          for (std::size_t x = 0; x < n; ++x) {
            out[x] += v[u] * hmm.transition(static_cast<Symbol>(s), u, x);
          }
        }
      }
    }
    forward.swap(next);
    words *= a;
  }
  std::vector<double> probs(words, 0.0);
  for (std::size_t w = 0; w < words; ++w) {
    for (std::size_t u = 0; u < n; ++u) probs[w] += forward[w * n + u];
  }
  return probs;
}

CountTable average_counts(const LabeledHMM& hmm, std::uint64_t length, int order, std::size_t cap) {
  require_order(order);
  if (length <= static_cast<std::uint64_t>(order)) {
    throw DomainError("average_counts needs N > k, got N=" + std::to_string(length) +
                      ", k=" + std::to_string(order));
  }
  TableShape shape(hmm.alphabet().size(), order, cap);
  auto probs = word_probabilities(hmm, order + 1);
  const double mass = static_cast<double>(length - static_cast<std::uint64_t>(order));
  for (double& p : probs) p *= mass;
  return CountTable(shape, std::move(probs));
}

bool is_unifilar(const LabeledHMM& hmm) {
  const auto n = hmm.num_states();
  for (std::size_t s = 0; s < hmm.alphabet().size(); ++s) {
    for (std::size_t u = 0; u < n; ++u) {
      int nonzero = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (hmm.transition(static_cast<Symbol>(s), u, v) > 0.0) ++nonzero;
      }
      if (nonzero > 1) return false;
    }
  }
  return true;
}

double true_entropy_rate(const LabeledHMM& hmm) {
  if (!is_unifilar(hmm)) {
    throw UnsupportedError(
        "true_entropy_rate: the presentation is nondeterministic, so the state-averaged "
        "closed form does not apply; use a published value (kSnsEntropyRate = 0.677867 for sns)");
  }
  const auto pi = stationary(hmm).pi;
  const auto n = hmm.num_states();
  double h = 0.0;
  for (std::size_t u = 0; u < n; ++u) {
    double row = 0.0;
    for (std::size_t s = 0; s < hmm.alphabet().size(); ++s) {
      double p = 0.0;
      for (std::size_t v = 0; v < n; ++v) p += hmm.transition(static_cast<Symbol>(s), u, v);
      if (p > 0.0) row -= p * std::log2(p);
    }
    h += pi[u] * row;
  }
  return h;
}

MarkovApproximation markov_approximation(const LabeledHMM& hmm, int order) {
  require_order(order);
  TableShape shape(hmm.alphabet().size(), order);
  const auto joint = word_probabilities(hmm, order + 1);
  const auto a = shape.alphabet_size();
  MarkovApproximation out{{shape, std::vector<double>(shape.num_words()),
                           std::vector<double>(shape.num_entries())},
                          std::vector<bool>(shape.num_words())};
  for (std::size_t h = 0; h < shape.num_words(); ++h) {
    double ph = 0.0;
    for (std::size_t s = 0; s < a; ++s) ph += joint[h * a + s];
    out.dist.word[h] = ph;
    out.support[h] = ph > 0.0;
    for (std::size_t s = 0; s < a; ++s) {
      out.dist.conditional[h * a + s] = ph > 0.0 ? joint[h * a + s] / ph : 1.0 / static_cast<double>(a);
    }
  }
  return out;
}

SymbolSequence sample_sequence(const LabeledHMM& hmm, std::size_t length, Rng& rng) {
  const auto n = hmm.num_states();
  const auto a = hmm.alphabet().size();
  const auto pi = stationary(hmm).pi;

  auto pick_state = [&] {
    const double u = rng.uniform();
    double acc = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      acc += pi[v];
      if (u < acc) return v;
    }
    return n - 1;
  };

  std::vector<Symbol> data;
  data.reserve(length);
  std::size_t state = pick_state();
  for (std::size_t t = 0; t < length; ++t) {
    const double u = rng.uniform();
    double acc = 0.0;
    std::size_t chosen_symbol = 0;
    std::size_t chosen_state = 0;
    bool done = false;
    // Walk the (symbol, successor) outcomes of the current state in fixed
    // order; rounding shortfall falls back to the last possible outcome.
    for (std::size_t s = 0; s < a && !done; ++s) {
      for (std::size_t v = 0; v < n; ++v) {
        const double p = hmm.transition(static_cast<Symbol>(s), state, v);
        if (p == 0.0) continue;
        acc += p;
        chosen_symbol = s;
        chosen_state = v;
        if (u < acc) {
          done = true;
          break;
        }
      }
    }
    data.push_back(static_cast<Symbol>(chosen_symbol));
    state = chosen_state;
  }
  return SymbolSequence(hmm.alphabet(), std::move(data));
}

}  // namespace bayesmc
