#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bayesmc/error.hpp"
#include "bayesmc/inference.hpp"
#include "bayesmc/processes.hpp"
#include "support/oracles.hpp"

using namespace bayesmc;

namespace {

CountTable binary_k1(double n00, double n01, double n10, double n11) {
  return CountTable(TableShape(2, 1), {n00, n01, n10, n11});
}

CountTable random_counts(std::mt19937_64& gen, const TableShape& shape, double scale) {
  std::uniform_real_distribution<double> u(0, scale);
  std::vector<double> v(shape.num_entries());
  for (auto& x : v) x = gen() % 4 == 0 ? 0.0 : std::floor(u(gen));
  return CountTable(shape, v);
}

HyperTable random_hyper(std::mt19937_64& gen, const TableShape& shape) {
  std::uniform_real_distribution<double> u(0.1, 5);
  std::vector<double> v(shape.num_entries());
  for (auto& x : v) x = u(gen);
  return HyperTable(shape, v);
}

TableShape random_shape(std::mt19937_64& gen) {
  return TableShape(2 + gen() % 3, 1 + static_cast<int>(gen() % 3));
}

}  // namespace

TEST(Posterior, Examples) {
  HyperTable flat = uniform_hyper(1, 2, 1.0);
  DirichletPosterior prior_only = posterior(CountTable(TableShape(2, 1)), flat);
  for (double v : prior_only.params()) EXPECT_EQ(v, 1.0);

  DirichletPosterior p = posterior(binary_k1(0, 1, 0, 0), flat);
  EXPECT_EQ(p.param(0, 1), 2.0);
  EXPECT_EQ(p.param(0, 0), 1.0);

  DirichletPosterior gm = posterior(average_counts(golden_mean(), 100, 1), flat);
  EXPECT_EQ(gm.param(0, 0), 1.0);

  EXPECT_THROW(posterior(CountTable(TableShape(2, 2)), flat), ShapeError);
}

TEST(PosteriorMean, Examples) {
  HyperTable flat = uniform_hyper(1, 2, 1.0);
  EXPECT_EQ(posterior_mean(posterior(CountTable(TableShape(2, 1)), flat), 1, 0), 0.5);
  EXPECT_NEAR(posterior_mean(posterior(binary_k1(0, 1, 0, 0), flat), 0, 1), 2.0 / 3.0, 1e-15);

  DirichletPosterior gm = posterior(average_counts(golden_mean(), 10000, 1), flat);
  EXPECT_NEAR(posterior_mean(gm, 1, 0), 0.5, 1e-3);
  EXPECT_NEAR(posterior_mean(gm, 0, 1), 1.0, 1e-3);
}

TEST(PosteriorMean, GoldenMeanConvergesTowardTruth) {
  HyperTable flat = uniform_hyper(1, 2, 1.0);
  double prev_gap = 1;
  for (std::uint64_t n : {100, 400, 1600, 6400}) {
    DirichletPosterior p = posterior(average_counts(golden_mean(), n, 1), flat);
    double gap = std::fabs(posterior_mean(p, 1, 0) - 0.5) + std::fabs(posterior_mean(p, 0, 1) - 1.0);
    EXPECT_LT(gap, prev_gap);
    prev_gap = gap;
  }
}

TEST(PosteriorMean, EvenProcessAtTenThousand) {
  DirichletPosterior p = posterior(average_counts(even_process(), 10000, 1), uniform_hyper(1, 2, 1.0));
  EXPECT_NEAR(posterior_mean(p, 1, 0), 0.25, 1e-3);
  EXPECT_NEAR(posterior_mean(p, 0, 1), 0.5, 1e-3);
}

TEST(PosteriorVariance, Examples) {
  HyperTable flat = uniform_hyper(1, 2, 1.0);
  EXPECT_NEAR(posterior_variance(posterior(CountTable(TableShape(2, 1)), flat), 0, 0), 1.0 / 12, 1e-16);
  EXPECT_NEAR(posterior_variance(posterior(binary_k1(0, 1, 0, 0), flat), 0, 1), 1.0 / 18, 1e-16);
}

TEST(PosteriorVariance, ShrinksAlongAverageCountSweep) {
  HyperTable flat = uniform_hyper(1, 2, 1.0);
  double prev = 1;
  for (std::uint64_t n = 50; n <= 20000; n = n * 3 / 2) {
    double v = posterior_variance(posterior(average_counts(golden_mean(), n, 1), flat), 1, 0);
    EXPECT_LT(v, prev) << n;
    prev = v;
  }
  EXPECT_LT(prev, 1e-4);
}

TEST(PriorMoments, Examples) {
  Moments m = prior_moments(uniform_hyper(1, 2, 1.0), 0, 0);
  EXPECT_EQ(m.mean, 0.5);
  EXPECT_NEAR(m.variance, 1.0 / 12, 1e-16);

  Moments skew = prior_moments(HyperTable(TableShape(2, 1), {3, 1, 1, 1}), 0, 0);
  EXPECT_NEAR(skew.mean, 0.75, 1e-16);
  EXPECT_NEAR(skew.variance, 3.0 / 80, 1e-16);

  EXPECT_NEAR(prior_moments(uniform_hyper(2, 3, 1.0), 4, 2).mean, 1.0 / 3, 1e-16);
}

TEST(Marginal, Examples) {
  HyperTable flat = uniform_hyper(1, 2, 1.0);
  MarginalBeta flat_m = marginal(posterior(CountTable(TableShape(2, 1)), flat), 1, 1);
  EXPECT_EQ(flat_m.beta.a, 1);
  EXPECT_EQ(flat_m.beta.b, 1);
  EXPECT_EQ(flat_m.density(0.3), 1.0);

  MarginalBeta m = marginal(posterior(binary_k1(0, 1, 0, 0), flat), 0, 1);
  EXPECT_EQ(m.beta.a, 2);
  EXPECT_EQ(m.beta.b, 1);
}

TEST(Marginal, GoldenMeanBoundaryMode) {
  MarginalBeta m = marginal(posterior(average_counts(golden_mean(), 400, 1), uniform_hyper(1, 2, 1.0)), 0, 1);
  EXPECT_LT(m.mean(), 1.0);
  EXPECT_GT(m.mean(), 0.99);
  // Mode at the boundary: the density increases all the way to 1.
  EXPECT_GT(m.density(1.0), m.density(0.999));
  EXPECT_GT(m.density(0.999), m.density(m.mean()));
  EXPECT_GT(m.density(m.mean()), m.density(0.99));
}

TEST(Marginal, VarianceMatchesPosteriorVariance) {
  std::mt19937_64 gen(12);
  for (int trial = 0; trial < 50; ++trial) {
    TableShape shape = random_shape(gen);
    DirichletPosterior p = posterior(random_counts(gen, shape, 30), random_hyper(gen, shape));
    for (std::uint64_t h = 0; h < shape.num_words(); ++h)
      for (Symbol s = 0; s < shape.alphabet_size(); ++s) {
        EXPECT_EQ(marginal(p, h, s).variance(), posterior_variance(p, h, s));
        EXPECT_DOUBLE_EQ(marginal(p, h, s).mean(), posterior_mean(p, h, s));
      }
  }
}

TEST(ConfidenceRegion, Examples) {
  ConfidenceRegion flat = confidence_region({0, 0, BetaParams(1, 1)}, 0.5);
  EXPECT_NEAR(flat.lower, 0.25, 1e-12);
  EXPECT_NEAR(flat.upper, 0.75, 1e-12);

  ConfidenceRegion tri = confidence_region({0, 0, BetaParams(2, 1)}, 0.5);
  EXPECT_NEAR(tri.lower, 0.5, 1e-12);
  EXPECT_NEAR(tri.upper, std::sqrt(0.75), 1e-12);

  ConfidenceRegion big = confidence_region({0, 0, BetaParams(34, 67)}, 0.95);
  EXPECT_NEAR(big.lower, oracle::beta_quantile(34, 67, 0.025), 1e-6);
  EXPECT_NEAR(big.upper, oracle::beta_quantile(34, 67, 0.975), 1e-6);

  EXPECT_THROW(confidence_region({0, 0, BetaParams(2, 2)}, 1.0), DomainError);
}

TEST(LogEvidence, Examples) {
  HyperTable flat = uniform_hyper(1, 2, 1.0);
  EXPECT_EQ(log_evidence(CountTable(TableShape(2, 1)), flat), 0.0);
  EXPECT_NEAR(log_evidence(binary_k1(0, 1, 0, 0), flat), std::log(0.5), 1e-14);
  EXPECT_NEAR(log_evidence(binary_k1(0, 1, 0, 0), flat), std::log(oracle::binary_evidence_quadrature("01", 1)),
              1e-14);

  double quad = oracle::binary_evidence_quadrature("0110", 1);
  double closed = std::exp(log_evidence(count_words(SymbolSequence::parse("0110", Alphabet::binary()), 1), flat));
  EXPECT_LT(oracle::relative_error(closed, quad), 1e-6);
}

TEST(LogEvidence, QuadratureOracleSmallBinaryTables) {
  // Every binary k=1 sequence with at most 12 counted transitions.
  HyperTable flat = uniform_hyper(1, 2, 1.0);
  for (int len = 2; len <= 13; ++len) {
    for (std::uint32_t bits = 0; bits < (1u << len); bits += 1 + len / 4) {
      std::string text(len, '0');
      for (int i = 0; i < len; ++i) text[i] = (bits >> i) & 1 ? '1' : '0';
      double closed = std::exp(log_evidence(count_words(SymbolSequence::parse(text, Alphabet::binary()), 1), flat));
      ASSERT_LT(oracle::relative_error(closed, oracle::binary_evidence_quadrature(text, 1)), 1e-6) << text;
    }
  }
}

TEST(LogEvidence, RealCountsAgreeWithGammaFormula) {
  // std::lgamma as an independent oracle for non-integer counts and hyperparameters.
  std::mt19937_64 gen(14);
  std::uniform_real_distribution<double> u(0, 50);
  for (int trial = 0; trial < 100; ++trial) {
    TableShape shape = random_shape(gen);
    std::vector<double> n(shape.num_entries());
    for (auto& x : n) x = u(gen);
    CountTable c(shape, n);
    HyperTable a = random_hyper(gen, shape);
    double want = 0;
    for (std::uint64_t h = 0; h < shape.num_words(); ++h) {
      want += std::lgamma(a.word_sum(h)) - std::lgamma(c.word_total(h) + a.word_sum(h));
      for (Symbol s = 0; s < shape.alphabet_size(); ++s)
        want += std::lgamma(c(h, s) + a(h, s)) - std::lgamma(a(h, s));
    }
    EXPECT_NEAR(log_evidence(c, a), want, 1e-9 * std::max(1.0, std::fabs(want)));
  }
}

TEST(LogPredictive, Examples) {
  HyperTable flat = uniform_hyper(1, 2, 1.0);
  CountTable zero(TableShape(2, 1));
  CountTable n = binary_k1(0, 10, 0, 0);
  CountTable m = binary_k1(0, 1, 0, 0);
  EXPECT_EQ(log_predictive(n, zero, flat), 0.0);
  EXPECT_NEAR(log_predictive(zero, m, flat), log_evidence(m, flat), 1e-15);
  EXPECT_NEAR(log_predictive(n, m, flat), std::log(11.0 / 12.0), 1e-13);
}

TEST(LogPredictive, ChainRuleProperty) {
  std::mt19937_64 gen(15);
  for (int trial = 0; trial < 300; ++trial) {
    TableShape shape = random_shape(gen);
    CountTable n1 = random_counts(gen, shape, 40);
    CountTable n2 = random_counts(gen, shape, 40);
    HyperTable a = random_hyper(gen, shape);
    double lhs = log_evidence(n1 + n2, a);
    double rhs = log_evidence(n1, a) + log_predictive(n1, n2, a);
    EXPECT_NEAR(lhs, rhs, 1e-12 * std::max(1.0, std::fabs(lhs)));
  }
}

TEST(PosteriorMean, RowsSumToOneAndDecompose) {
  std::mt19937_64 gen(16);
  for (int trial = 0; trial < 200; ++trial) {
    TableShape shape = random_shape(gen);
    CountTable n = random_counts(gen, shape, 25);
    HyperTable a = random_hyper(gen, shape);
    DirichletPosterior p = posterior(n, a);
    for (std::uint64_t h = 0; h < shape.num_words(); ++h) {
      double row = 0;
      for (Symbol s = 0; s < shape.alphabet_size(); ++s) {
        double pme = posterior_mean(p, h, s);
        row += pme;
        if (n.word_total(h) > 0) {
          double mle = n(h, s) / n.word_total(h);
          double prior = a(h, s) / a.word_sum(h);
          double blend = (n.word_total(h) * mle + a.word_sum(h) * prior) / (n.word_total(h) + a.word_sum(h));
          EXPECT_NEAR(pme, blend, 1e-12);
        }
      }
      EXPECT_NEAR(row, 1.0, 1e-12);
    }
  }
}

TEST(SamplePosterior, EmpiricalMeans) {
  HyperTable flat = uniform_hyper(1, 2, 1.0);
  DirichletPosterior p = posterior(binary_k1(0, 1, 0, 0), flat);
  Rng rng(99);
  double sum_flat = 0, sum_tilted = 0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    TransitionTable t = sample_posterior(p, rng);
    sum_flat += t(1, 0);
    sum_tilted += t(0, 1);
    ASSERT_NEAR(t(0, 0) + t(0, 1), 1.0, 1e-12);
  }
  EXPECT_NEAR(sum_flat / draws, 0.5, 0.005);
  EXPECT_NEAR(sum_tilted / draws, 2.0 / 3.0, 0.005);
}

TEST(SamplePosterior, SeedDeterminism) {
  DirichletPosterior p = posterior(binary_k1(3, 1, 4, 1), uniform_hyper(1, 2, 0.5));
  Rng a(2024), b(2024);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(sample_posterior(p, a).probs, sample_posterior(p, b).probs);
}

TEST(Summary, RowsAndIntervals) {
  CountTable n = binary_k1(2, 5, 4, 1);
  auto rows = summarize_posterior(n, uniform_hyper(1, 2, 1.0), Alphabet::binary(), 0.9);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[1].word, "0");
  EXPECT_EQ(rows[1].symbol, '1');
  EXPECT_EQ(rows[1].count, 5);
  EXPECT_NEAR(rows[1].mean, 6.0 / 9.0, 1e-15);
  for (const auto& r : rows) {
    EXPECT_LT(r.ci_low, r.mean);
    EXPECT_GT(r.ci_high, r.mean);
  }
}

TEST(DensityGrid, IntegratesToOne) {
  MarginalBeta m{0, 0, BetaParams(17.5, 50.5)};
  auto grid = density_grid(m, 4000);
  double mass = 0;
  for (const auto& [x, d] : grid) mass += d / grid.size();
  EXPECT_NEAR(mass, 1.0, 1e-6);
  EXPECT_NEAR(grid.front().first, 0.5 / 4000, 1e-15);
}
