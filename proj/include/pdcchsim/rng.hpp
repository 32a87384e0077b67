#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include "pdcchsim/bits.hpp"

namespace pdcch {

std::uint64_t splitmix64(std::uint64_t x);

/// Order-free combination of a master seed with counters, so per-trial seeds
/// do not depend on scheduling (same triple always yields the same stream).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b);

/// Deterministic generator: mt19937_64 core with an explicit Box-Muller
/// normal so results do not depend on libstdc++ distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  /// Circularly-symmetric complex Gaussian with total variance var.
  Cplx cgaussian(double var) {
    const double s = std::sqrt(var / 2.0);
    const double re = gaussian();
    const double im = gaussian();
    return {s * re, s * im};
  }

  BitVec bits(std::size_t n) {
    BitVec out(n);
    for (auto& b : out) b = static_cast<std::uint8_t>(engine_() & 1u);
    return out;
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace pdcch
