#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bayesmc/alphabet.hpp"
#include "bayesmc/counts.hpp"
#include "bayesmc/random.hpp"

namespace bayesmc {

/// Hidden-state process given by labeled transition matrices T^(s):
/// T^(s)[u][v] = Pr(emit s, move to v | in u). T = sum_s T^(s) is stochastic.
class LabeledHMM {
 public:
  /// `matrices[s]` is row-major num_states x num_states. Throws ConfigError
  /// naming the violated invariant (negativity, row sums, shapes).
  LabeledHMM(Alphabet alphabet, std::size_t num_states,
             std::vector<std::vector<double>> matrices);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return num_states_; }
  double transition(Symbol s, std::size_t from, std::size_t to) const;
  /// T[from][to] summed over symbols.
  double total_transition(std::size_t from, std::size_t to) const;
  std::span<const double> labeled(Symbol s) const { return matrices_.at(s); }

 private:
  Alphabet alphabet_;
  std::size_t num_states_;
  std::vector<std::vector<double>> matrices_;
};

LabeledHMM golden_mean();
LabeledHMM even_process();
/// Simple nondeterministic source.
LabeledHMM sns();

/// Published entropy rate of the simple nondeterministic source (bits/symbol).
inline constexpr double kSnsEntropyRate = 0.677867;

/// Builtin sources by name: "golden-mean", "even", "sns".
std::optional<LabeledHMM> builtin_process(std::string_view name);
/// Known entropy rate of a builtin source, if any.
std::optional<double> builtin_entropy_rate(std::string_view name);

struct StationaryDist {
  std::vector<double> pi;
};

/// Unique left eigenvector of T for eigenvalue 1, obtained from a direct
/// solve with one balance equation replaced by normalization. Throws
/// ConfigError if T is reducible.
StationaryDist stationary(const LabeledHMM& hmm);

/// pi T^(s_0) ... T^(s_{L-1}) eta.
double word_probability(const LabeledHMM& hmm, std::span<const Symbol> word);

/// Probabilities of all |A|^L words indexed by WordIndex code.
std::vector<double> word_probabilities(const LabeledHMM& hmm, int length);

/// Exact average counts n(h^k s) = (N - k) p(h^k s). Requires N > k.
CountTable average_counts(const LabeledHMM& hmm, std::uint64_t length, int order,
                          std::size_t cap = kDefaultEntryCap);

/// True when each row of every T^(s) has at most one nonzero entry.
bool is_unifilar(const LabeledHMM& hmm);

/// -sum_v p(v) sum_s p(s|v) log2 p(s|v). Throws UnsupportedError for
/// nondeterministic presentations.
double true_entropy_rate(const LabeledHMM& hmm);

/// Order-k Markov chain matching the process's length-(k+1) word statistics.
/// Words of zero probability get uniform conditionals and support = false.
struct MarkovApproximation {
  WordDistribution dist;
  std::vector<bool> support;
};

MarkovApproximation markov_approximation(const LabeledHMM& hmm, int order);

/// Realization of length N starting from a stationary hidden state.
SymbolSequence sample_sequence(const LabeledHMM& hmm, std::size_t length, Rng& rng);

/// {"states": n, "alphabet": "01", "matrices": {"0": [[...]], "1": [[...]]}}.
LabeledHMM load_hmm_json(std::string_view text);
LabeledHMM load_hmm_file(const std::string& path);

}  // namespace bayesmc
