#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bayesmc/alphabet.hpp"

namespace bayesmc {

/// Default cap on |A|^(k+1) table entries (2^26 doubles, 512 MiB).
inline constexpr std::size_t kDefaultEntryCap = std::size_t{1} << 26;

/// Number of entries |A|^(k+1) of an order-k table. Throws DomainError when
/// the count exceeds `cap` or overflows.
std::size_t table_entries(std::size_t alphabet_size, int order,
                          std::size_t cap = kDefaultEntryCap);

/// Order k and alphabet size of a dense (word h^k, next symbol s) table.
/// Entry (h, s) lives at h * |A| + s.
class TableShape {
 public:
  TableShape(std::size_t alphabet_size, int order, std::size_t cap = kDefaultEntryCap);

  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  int order() const noexcept { return order_; }
  std::size_t num_words() const noexcept { return num_words_; }
  std::size_t num_entries() const noexcept { return num_words_ * alphabet_size_; }
  std::size_t index(std::uint64_t word, Symbol s) const;

  friend bool operator==(const TableShape&, const TableShape&) = default;

 private:
  std::size_t alphabet_size_;
  int order_;
  std::size_t num_words_;
};

/// Throws ShapeError naming `what` if the shapes differ.
void require_same_shape(const TableShape& a, const TableShape& b, const char* what);

/// Word counts n(h^k s). Entries are nonnegative reals so that exact
/// average counts (N-k) p(h^k s) share the representation with integer
/// empirical counts.
class CountTable {
 public:
  /// All-zero table.
  explicit CountTable(TableShape shape);
  /// Throws DomainError on negative or non-finite entries, ShapeError on size.
  CountTable(TableShape shape, std::vector<double> values);

  const TableShape& shape() const noexcept { return shape_; }
  int order() const noexcept { return shape_.order(); }
  std::size_t alphabet_size() const noexcept { return shape_.alphabet_size(); }

  double operator()(std::uint64_t word, Symbol s) const { return values_[shape_.index(word, s)]; }
  /// n(h^k) = sum_s n(h^k s).
  double word_total(std::uint64_t word) const { return word_totals_.at(word); }
  double total() const noexcept { return total_; }

  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> word_totals() const noexcept { return word_totals_; }

  friend CountTable operator+(const CountTable& a, const CountTable& b);

 private:
  TableShape shape_;
  std::vector<double> values_;
  std::vector<double> word_totals_;
  double total_ = 0.0;
};

/// Dirichlet hyperparameters alpha(h^k s), all strictly positive.
class HyperTable {
 public:
  /// Throws DomainError unless every entry is finite and > 0.
  HyperTable(TableShape shape, std::vector<double> values);

  const TableShape& shape() const noexcept { return shape_; }
  int order() const noexcept { return shape_.order(); }
  std::size_t alphabet_size() const noexcept { return shape_.alphabet_size(); }

  double operator()(std::uint64_t word, Symbol s) const { return values_[shape_.index(word, s)]; }
  /// alpha(h^k) = sum_s alpha(h^k s).
  double word_sum(std::uint64_t word) const { return word_sums_.at(word); }
  /// alpha_k = sum over all words of alpha(h^k).
  double total() const noexcept { return total_; }

  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> word_sums() const noexcept { return word_sums_; }

 private:
  TableShape shape_;
  std::vector<double> values_;
  std::vector<double> word_sums_;
  double total_ = 0.0;
};

/// Counts every length-(k+1) window of `seq`. The first k symbols condition
/// the likelihood and contribute no counts, so the total mass is N - k.
/// Requires k >= 1 and N >= k + 1.
CountTable count_words(const SymbolSequence& seq, int order,
                       std::size_t cap = kDefaultEntryCap);

HyperTable uniform_hyper(int order, std::size_t alphabet_size, double value);

/// alpha(h^k s) = fake(h^k s) + 1.
HyperTable hyper_from_fake_counts(const TableShape& shape, std::span<const double> fake);
HyperTable hyper_from_fake_counts(const CountTable& fake);

/// Word and conditional distributions {w(h^k), c(s|h^k)} of an order-k
/// description. Shared by the posterior-mean Q, the prior R, the uniform U
/// and the Markov approximations of reference processes.
struct WordDistribution {
  TableShape shape;
  std::vector<double> word;         ///< size |A|^k
  std::vector<double> conditional;  ///< size |A|^(k+1), rows sum to 1

  double word_prob(std::uint64_t h) const { return word.at(h); }
  double cond(std::uint64_t h, Symbol s) const { return conditional[shape.index(h, s)]; }
};

/// A full set of transition probabilities p(s|h^k), e.g. one posterior draw.
struct TransitionTable {
  TableShape shape;
  std::vector<double> probs;

  double operator()(std::uint64_t h, Symbol s) const { return probs[shape.index(h, s)]; }
};

}  // namespace bayesmc
