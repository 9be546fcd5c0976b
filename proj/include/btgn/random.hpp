#pragma once

#include <cstdint>
#include <random>

namespace btgn {

/// Deterministic random source. All draws are derived from raw mt19937_64
/// output, so a given seed yields the same stream on every platform.
/// Single-owner: concurrent sampling needs independent seeded instances.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on the open interval (0, 1).
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1p-53;
  }

  /// Uniform on the open interval (-1, 1).
  double uniform_pm1() { return 2.0 * uniform() - 1.0; }

  /// Standard normal via the Marsaglia polar method.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double v1, v2, s;
    do {
      v1 = uniform_pm1();
      v2 = uniform_pm1();
      s = v1 * v1 + v2 * v2;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v2 * f;
    has_spare_ = true;
    return v1 * f;
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// One Gamma(shape, scale 1) variate, Marsaglia-Tsang squeeze method with the
/// U^(1/shape) boost for shape < 1. Throws std::domain_error for shape <= 0.
double gamma_sample(double shape, Rng& rng);

}  // namespace btgn
