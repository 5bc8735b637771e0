#pragma once

namespace bayesmc {

// Real-valued special functions for x > 0. Out-of-domain arguments throw
// DomainError; no function returns a sentinel.

/// ln Gamma(x), relative error below 1e-12 on [1e-6, 1e8].
double log_gamma(double x);

/// psi^(0)(x) = d/dx ln Gamma(x).
double digamma(double x);

/// psi^(1)(x) = d^2/dx^2 ln Gamma(x).
double trigamma(double x);

/// ln B(a, b) = ln Gamma(a) + ln Gamma(b) - ln Gamma(a + b).
double log_beta(double a, double b);

/// Shape parameters of a Beta distribution, both strictly positive.
struct BetaParams {
  BetaParams(double a, double b);

  double a;
  double b;

  double mean() const noexcept { return a / (a + b); }
  double variance() const noexcept;
};

/// Beta(a, b) density at x in [0, 1]. Boundary values follow the limit
/// (possibly +inf when a < 1 or b < 1).
double beta_pdf(const BetaParams& p, double x);

/// Regularized incomplete Beta I_x(a, b) = Pr(X <= x), X ~ Beta(a, b).
double reg_inc_beta(const BetaParams& p, double x);

/// x such that I_x(a, b) = prob.
double inv_reg_inc_beta(const BetaParams& p, double prob);

}  // namespace bayesmc
