#include "bayesmc/counts.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "bayesmc/error.hpp"

namespace bayesmc {

std::size_t table_entries(std::size_t alphabet_size, int order, std::size_t cap) {
  if (alphabet_size < 2) throw DomainError("alphabet size must be at least 2");
  if (order < 0) throw DomainError("order must be nonnegative, got " + std::to_string(order));
  std::size_t entries = alphabet_size;
  for (int i = 0; i < order; ++i) {
    if (entries > cap / alphabet_size) {
      throw DomainError("order " + std::to_string(order) + " over an alphabet of size " +
                        std::to_string(alphabet_size) + " exceeds the table cap of " +
                        std::to_string(cap) + " entries");
    }
    entries *= alphabet_size;
  }
  if (entries > cap) {
    throw DomainError("order " + std::to_string(order) + " exceeds the table cap of " +
                      std::to_string(cap) + " entries");
  }
  return entries;
}

TableShape::TableShape(std::size_t alphabet_size, int order, std::size_t cap)
    : alphabet_size_(alphabet_size),
      order_(order),
      num_words_(table_entries(alphabet_size, order, cap) / alphabet_size) {}

std::size_t TableShape::index(std::uint64_t word, Symbol s) const {
  if (word >= num_words_ || s >= alphabet_size_) {
    throw DomainError("entry (" + std::to_string(word) + ", " + std::to_string(s) +
                      ") outside order-" + std::to_string(order_) + " table");
  }
  return static_cast<std::size_t>(word) * alphabet_size_ + s;
}

void require_same_shape(const TableShape& a, const TableShape& b, const char* what) {
  if (!(a == b)) {
    throw ShapeError(std::string(what) + ": table shapes differ (order " +
                     std::to_string(a.order()) + "/|A|=" + std::to_string(a.alphabet_size()) +
                     " vs order " + std::to_string(b.order()) +
                     "/|A|=" + std::to_string(b.alphabet_size()) + ")");
  }
}

namespace {

void check_size(const TableShape& shape, std::size_t size) {
  if (size != shape.num_entries()) {
    throw ShapeError("table of order " + std::to_string(shape.order()) + " needs " +
                     std::to_string(shape.num_entries()) + " entries, got " +
                     std::to_string(size));
  }
}

std::vector<double> row_sums(const TableShape& shape, const std::vector<double>& values) {
  std::vector<double> sums(shape.num_words(), 0.0);
  const auto a = shape.alphabet_size();
  for (std::size_t h = 0; h < sums.size(); ++h) {
    double s = 0.0;
    for (std::size_t j = 0; j < a; ++j) s += values[h * a + j];
    sums[h] = s;
  }
  return sums;
}

double sum_of(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s;
}

}  // namespace

CountTable::CountTable(TableShape shape)
    : shape_(shape),
      values_(shape.num_entries(), 0.0),
      word_totals_(shape.num_words(), 0.0) {}

CountTable::CountTable(TableShape shape, std::vector<double> values)
    : shape_(shape), values_(std::move(values)) {
  check_size(shape_, values_.size());
  for (double v : values_) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw DomainError("counts must be finite and nonnegative, got " + std::to_string(v));
    }
  }
  word_totals_ = row_sums(shape_, values_);
  total_ = sum_of(word_totals_);
}

CountTable operator+(const CountTable& a, const CountTable& b) {
  require_same_shape(a.shape(), b.shape(), "count addition");
  std::vector<double> sum(a.values_.size());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a.values_[i] + b.values_[i];
  return CountTable(a.shape(), std::move(sum));
}

HyperTable::HyperTable(TableShape shape, std::vector<double> values)
    : shape_(shape), values_(std::move(values)) {
  check_size(shape_, values_.size());
  for (double v : values_) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DomainError("hyperparameters must be finite and positive, got " + std::to_string(v));
    }
  }
  word_sums_ = row_sums(shape_, values_);
  total_ = sum_of(word_sums_);
}

CountTable count_words(const SymbolSequence& seq, int order, std::size_t cap) {
  if (order < 1) throw DomainError("count_words needs order k >= 1, got " + std::to_string(order));
  const auto n = seq.size();
  if (n < static_cast<std::size_t>(order) + 1) {
    throw DomainError("sequence of length " + std::to_string(n) + " is shorter than k+1 = " +
                      std::to_string(order + 1));
  }
  TableShape shape(seq.alphabet().size(), order, cap);
  const std::uint64_t a = shape.alphabet_size();
  const std::uint64_t modulus = shape.num_entries();
  std::vector<double> counts(shape.num_entries(), 0.0);

  // Rolling code of the current length-(k+1) window.
  std::uint64_t code = 0;
  for (int i = 0; i < order; ++i) code = code * a + seq[i];
  for (std::size_t t = order; t < n; ++t) {
    code = (code * a + seq[t]) % modulus;
    counts[code] += 1.0;
  }
  return CountTable(shape, std::move(counts));
}

HyperTable uniform_hyper(int order, std::size_t alphabet_size, double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError("uniform hyperparameter must be positive, got " + std::to_string(value));
  }
  TableShape shape(alphabet_size, order);
  return HyperTable(shape, std::vector<double>(shape.num_entries(), value));
}

HyperTable hyper_from_fake_counts(const TableShape& shape, std::span<const double> fake) {
  check_size(shape, fake.size());
  std::vector<double> alpha(fake.size());
  for (std::size_t i = 0; i < fake.size(); ++i) {
    if (!(fake[i] >= 0.0) || !std::isfinite(fake[i])) {
      throw DomainError("fake counts must be nonnegative, got " + std::to_string(fake[i]));
    }
    alpha[i] = fake[i] + 1.0;
  }
  return HyperTable(shape, std::move(alpha));
}

HyperTable hyper_from_fake_counts(const CountTable& fake) {
  return hyper_from_fake_counts(fake.shape(), fake.values());
}

}  // namespace bayesmc
