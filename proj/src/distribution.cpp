#include "btgn/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "btgn/specfun.hpp"

namespace btgn {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

void check_finite_x(double x) {
  if (!std::isfinite(x)) throw std::domain_error("evaluation point must be finite");
}

}  // namespace

ShapeParams::ShapeParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    throw std::invalid_argument("alpha must be positive and finite, got " + std::to_string(alpha));
  }
  if (!std::isfinite(beta) || beta <= 0.0) {
    throw std::invalid_argument("beta must be positive and finite, got " + std::to_string(beta));
  }
  kernel_shape_ = alpha_ / beta_;
  norm_shape_ = (alpha_ + 1.0) / beta_;
  log_gamma_kernel_ = log_gamma(kernel_shape_);
  log_gamma_norm_ = log_gamma(norm_shape_);
  log_norm_ = kLn2 + log_gamma_norm_;
  gamma_ratio_ = std::exp(log_gamma_kernel_ - log_gamma_norm_);
}

LocScaleParams::LocScaleParams(double mu, double sigma, ShapeParams shape)
    : mu_(mu), sigma_(sigma), shape_(shape) {
  if (!std::isfinite(mu)) throw std::invalid_argument("mu must be finite");
  if (!std::isfinite(sigma) || sigma <= 0.0) {
    throw std::invalid_argument("sigma must be positive and finite, got " + std::to_string(sigma));
  }
}

double derivative_kernel(const ShapeParams& p, double x) {
  check_finite_x(x);
  if (x == 0.0) {
    if (p.alpha() < 1.0) {
      throw std::domain_error("derivative kernel has a pole at x=0 for alpha < 1");
    }
    return 0.0;
  }
  const double ax = std::abs(x);
  const double sign = x > 0.0 ? 1.0 : -1.0;
  return -p.beta() * sign * std::pow(ax, p.alpha() - 1.0) * std::exp(-std::pow(ax, p.beta()));
}

double log_pdf(const ShapeParams& p, double x) {
  check_finite_x(x);
  const double y = std::pow(std::abs(x), p.beta());
  return p.log_gamma_kernel_shape() + log_reg_gamma_q(p.kernel_shape(), y) - p.log_norm();
}

double pdf(const ShapeParams& p, double x) { return std::exp(log_pdf(p, x)); }

double cdf(const ShapeParams& p, double x) {
  check_finite_x(x);
  if (x > 0.0) return 1.0 - cdf(p, -x);
  if (x == 0.0) return 0.5;
  const double ax = -x;
  const double y = std::pow(ax, p.beta());
  const double q_norm = reg_gamma_q(p.norm_shape(), y);
  const double q_kernel = reg_gamma_q(p.kernel_shape(), y);
  return 0.5 * (q_norm - ax * p.gamma_ratio() * q_kernel);
}

double quantile(const ShapeParams& p, double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw std::domain_error("quantile level must lie in (0,1), got " + std::to_string(q));
  }
  if (q == 0.5) return 0.0;
  // Work on the left half by symmetry: solve cdf(x) = ql for x <= 0.
  const bool flip = q > 0.5;
  const double ql = flip ? 1.0 - q : q;

  double lo = -1.0;
  while (cdf(p, lo) > ql) lo *= 2.0;
  double hi = lo < -1.0 ? lo / 2.0 : 0.0;

  constexpr double kTol = 1e-12;
  constexpr int kMaxBisect = 200;
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < kMaxBisect; ++i) {
    x = 0.5 * (lo + hi);
    const double f = cdf(p, x) - ql;
    if (std::abs(f) <= kTol) break;
    if (f < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
  }
  // Newton polish; pdf is strictly positive everywhere.
  for (int i = 0; i < 6; ++i) {
    const double f = cdf(p, x) - ql;
    if (std::abs(f) <= kTol) break;
    const double step = f / pdf(p, x);
    const double next = x - step;
    if (next <= lo || next >= hi) break;
    x = next;
  }
  return flip ? -x : x;
}

double abs_moment(const ShapeParams& p, double r) {
  if (!std::isfinite(r) || r <= -1.0) {
    throw std::domain_error("absolute moment requires r > -1, got " + std::to_string(r));
  }
  const double moment_shape = (p.alpha() + r + 1.0) / p.beta();
  return std::exp(log_gamma(moment_shape) - p.log_gamma_norm_shape()) / (r + 1.0);
}

double variance(const ShapeParams& p) { return abs_moment(p, 2.0); }

double excess_kurtosis(const ShapeParams& p) {
  const double m2 = abs_moment(p, 2.0);
  return abs_moment(p, 4.0) / (m2 * m2) - 3.0;
}

double sample_one(const ShapeParams& p, Rng& rng) {
  const double g = gamma_sample(p.norm_shape(), rng);
  return rng.uniform_pm1() * std::pow(g, 1.0 / p.beta());
}

Eigen::ArrayXd sample(const ShapeParams& p, Eigen::Index n, Rng& rng) {
  if (n < 0) throw std::invalid_argument("sample count must be non-negative");
  Eigen::ArrayXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) out[i] = sample_one(p, rng);
  return out;
}

double lemma2_closed_form(const ShapeParams& p, double x, double r) {
  if (!std::isfinite(x) || x < 0.0) {
    throw std::domain_error("lemma2_closed_form requires x >= 0");
  }
  if (!std::isfinite(r) || r <= -1.0) {
    throw std::domain_error("lemma2_closed_form requires r > -1");
  }
  const double y = std::pow(x, p.beta());
  const double moment_shape = (p.alpha() + r + 1.0) / p.beta();
  const double head = upper_gamma(moment_shape, y);
  const double tail = x == 0.0 ? 0.0 : std::pow(x, r + 1.0) * upper_gamma(p.kernel_shape(), y);
  return (head - tail) / (r + 1.0);
}

bool tail_limit_check(const ShapeParams& p, double k, const Eigen::ArrayXd& x_grid) {
  if (x_grid.size() < 2) throw std::invalid_argument("grid needs at least two points");
  Eigen::ArrayXd logv(x_grid.size());
  double prev = 0.0;
  for (Eigen::Index i = 0; i < x_grid.size(); ++i) {
    const double x = x_grid[i];
    if (!(x > 0.0) || (i > 0 && x <= prev)) {
      throw std::invalid_argument("grid must be strictly increasing and positive");
    }
    prev = x;
    logv[i] = k * std::log(x) + log_upper_gamma(p.kernel_shape(), std::pow(x, p.beta()));
  }
  Eigen::Index peak = 0;
  for (Eigen::Index i = 1; i < logv.size(); ++i) {
    if (logv[i] > logv[peak]) peak = i;
  }
  for (Eigen::Index i = peak + 1; i < logv.size(); ++i) {
    if (logv[i] >= logv[i - 1]) return false;
  }
  return logv[logv.size() - 1] < std::log(1e-12);
}

double pdf(const LocScaleParams& p, double x) { return std::exp(log_pdf(p, x)); }

double log_pdf(const LocScaleParams& p, double x) {
  check_finite_x(x);
  return log_pdf(p.shape(), (x - p.mu()) / p.sigma()) - std::log(p.sigma());
}

double cdf(const LocScaleParams& p, double x) {
  check_finite_x(x);
  return cdf(p.shape(), (x - p.mu()) / p.sigma());
}

double quantile(const LocScaleParams& p, double q) {
  return p.mu() + p.sigma() * quantile(p.shape(), q);
}

double sample_one(const LocScaleParams& p, Rng& rng) {
  return p.mu() + p.sigma() * sample_one(p.shape(), rng);
}

Eigen::ArrayXd sample(const LocScaleParams& p, Eigen::Index n, Rng& rng) {
  return p.mu() + p.sigma() * sample(p.shape(), n, rng);
}

}  // namespace btgn
