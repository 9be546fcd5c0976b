#pragma once

#include <stdexcept>
#include <string>

namespace btgn {

/// Thrown when an iterative numeric evaluation fails to converge within its
/// iteration budget. Never silently returns NaN instead.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Validated argument pair of the upper incomplete gamma function Gamma(s, x).
/// Construction throws std::domain_error unless s > 0 and x >= 0, both finite.
struct GammaArgs {
  double s;
  double x;
  GammaArgs(double s, double x);
};

/// ln Gamma(s) for s > 0. Lanczos approximation, relative error below 1e-13
/// on s in [1e-3, 1e3].
double log_gamma(double s);

/// Error function; thin wrapper that rejects non-finite input.
double erf(double x);

/// Regularized upper incomplete gamma Q(s, x) = Gamma(s, x) / Gamma(s).
/// Series branch for x < s + 1, Lentz continued fraction otherwise.
double reg_gamma_q(double s, double x);

/// ln Q(s, x), evaluated so it stays finite far into the tail where Q itself
/// underflows (x up to 1e4 and beyond).
double log_reg_gamma_q(double s, double x);

/// Upper incomplete gamma Gamma(s, x) and its logarithm.
double upper_gamma(double s, double x);
double log_upper_gamma(double s, double x);

namespace detail {

/// Regularized lower incomplete gamma P(s, x) by power series; valid branch
/// is x < s + 1 but the series converges (slowly) anywhere.
double gamma_p_series(double s, double x);

/// Continued-fraction factor h with Q(s, x) = exp(-x + s ln x - lnGamma(s)) * h,
/// evaluated by the modified Lentz method; valid branch is x >= s + 1.
double gamma_q_cf_factor(double s, double x);

}  // namespace detail

}  // namespace btgn
