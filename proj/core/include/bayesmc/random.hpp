#pragma once

#include <cstdint>
#include <random>

namespace bayesmc {

/// Seeded generator passed explicitly to every sampling routine. The engine
/// output is fixed by the standard and the transforms below are our own, so a
/// given seed yields the same draws on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on (0, 1).
  double open_uniform();
  double normal();
  /// Gamma(shape, 1) via Marsaglia-Tsang; shape < 1 uses the boost
  /// Gamma(shape + 1) * U^(1/shape).
  double gamma(double shape);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace bayesmc
