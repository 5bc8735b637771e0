#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library under test.

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <string>
#include <vector>

namespace oracle {

struct GaussLegendre {
  std::vector<double> nodes;    // on [0,1]
  std::vector<double> weights;  // sum to 1
};

// Newton iteration on P_n from Chebyshev starting guesses.
inline GaussLegendre gauss_legendre(int n) {
  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (n + 0.5L));
    long double dp = 0;
    for (int it = 0; it < 100; ++it) {
      long double p0 = 1, p1 = x;
      for (int j = 2; j <= n; ++j) {
        long double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      long double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    gl.nodes[i] = static_cast<double>((1 - x) / 2);
    gl.weights[i] = static_cast<double>(1 / ((1 - x * x) * dp * dp));
  }
  return gl;
}

inline double simpson_step(const std::function<double(double)>& f, double a, double b, double fa,
                           double fm, double fb, double whole, double eps, int depth) {
  double m = (a + b) / 2, lm = (a + m) / 2, rm = (m + b) / 2;
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6 * (fa + 4 * flm + fm);
  double right = (b - m) / 6 * (fm + 4 * frm + fb);
  if (depth <= 0 || std::fabs(left + right - whole) <= 15 * eps)
    return left + right + (left + right - whole) / 15;
  return simpson_step(f, a, m, fa, flm, fm, left, eps / 2, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, eps / 2, depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double eps = 1e-13, int depth = 50) {
  double fa = f(a), fb = f(b), fm = f((a + b) / 2);
  return simpson_step(f, a, b, fa, fm, fb, (b - a) / 6 * (fa + 4 * fm + fb), eps, depth);
}

// Unnormalized Beta density in log space, scaled by its mode value so large
// shapes do not underflow.
inline std::function<double(double)> beta_kernel(double a, double b) {
  double mode = (a - 1) / (a + b - 2);
  double log_peak = (a - 1) * std::log(mode) + (b - 1) * std::log1p(-mode);
  return [=](double x) {
    if (x <= 0 || x >= 1) return 0.0;
    return std::exp((a - 1) * std::log(x) + (b - 1) * std::log1p(-x) - log_peak);
  };
}

// CDF of Beta(a,b), a,b > 1, as a ratio of two quadratures.
inline double beta_cdf(double a, double b, double x) {
  auto f = beta_kernel(a, b);
  return adaptive_simpson(f, 0, x) / adaptive_simpson(f, 0, 1);
}

inline double beta_quantile(double a, double b, double prob) {
  auto f = beta_kernel(a, b);
  double total = adaptive_simpson(f, 0, 1);
  double lo = 0, hi = 1;
  for (int i = 0; i < 60; ++i) {
    double mid = (lo + hi) / 2;
    (adaptive_simpson(f, 0, mid) / total < prob ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

// Euler-Mascheroni via harmonic sum plus Euler-Maclaurin tail.
inline double euler_gamma() {
  const long double n = 10000;
  long double h = 0;
  for (int k = 10000; k >= 1; --k) h += 1.0L / k;
  long double n2 = n * n;
  return static_cast<double>(h - std::log(n) - 1 / (2 * n) + 1 / (12 * n2) - 1 / (120 * n2 * n2) +
                             1 / (252 * n2 * n2 * n2));
}

// Sum of 1/k^2 with Euler-Maclaurin tail.
inline double zeta2() {
  const long double n = 10000;
  long double s = 0;
  for (int k = 10000; k >= 1; --k) s += 1.0L / (static_cast<long double>(k) * k);
  long double tail = 1 / n - 1 / (2 * n * n) + 1 / (6 * n * n * n) - 1 / (30 * n * n * n * n * n);
  return static_cast<double>(s + tail);
}

// Count of every length-(k+1) window, keyed by the window text.
inline std::map<std::string, int> window_counts(const std::string& text, int k) {
  std::map<std::string, int> out;
  for (std::size_t t = 0; t + k + 1 <= text.size(); ++t) ++out[text.substr(t, k + 1)];
  return out;
}

// Evidence of a binary sequence under order k with uniform alpha=1, by a full
// tensor-product Gauss-Legendre integral over one p(1|h) per context h.
inline double binary_evidence_quadrature(const std::string& text, int k, int points = 12) {
  const GaussLegendre gl = gauss_legendre(points);
  const int words = 1 << k;
  std::vector<int> ctx(text.size(), 0);
  std::vector<int> next;
  for (std::size_t t = k; t < text.size(); ++t) {
    int h = 0;
    for (int j = 0; j < k; ++j) h = 2 * h + (text[t - k + j] - '0');
    ctx[t] = h;
  }
  std::vector<int> idx(words, 0);
  long double total = 0;
  while (true) {
    long double w = 1, like = 1;
    for (int h = 0; h < words; ++h) w *= gl.weights[idx[h]];
    for (std::size_t t = k; t < text.size(); ++t) {
      double p1 = gl.nodes[idx[ctx[t]]];
      like *= text[t] == '1' ? p1 : 1 - p1;
    }
    total += w * like;
    int d = 0;
    while (d < words && ++idx[d] == points) idx[d++] = 0;
    if (d == words) break;
  }
  return static_cast<double>(total);
}

inline double relative_error(double got, double want) {
  return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}

}  // namespace oracle
