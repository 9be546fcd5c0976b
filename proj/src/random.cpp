#include "btgn/random.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace btgn {

namespace {

double gamma_sample_shape_ge1(double shape, Rng& rng) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform();
    if (u < 1.0 - 0.0331 * (x * x) * (x * x)) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace

double gamma_sample(double shape, Rng& rng) {
  if (!std::isfinite(shape) || shape <= 0.0) {
    throw std::domain_error("gamma_sample shape must be positive and finite, got " +
                            std::to_string(shape));
  }
  if (shape < 1.0) {
    return gamma_sample_shape_ge1(shape + 1.0, rng) * std::pow(rng.uniform(), 1.0 / shape);
  }
  return gamma_sample_shape_ge1(shape, rng);
}

}  // namespace btgn
