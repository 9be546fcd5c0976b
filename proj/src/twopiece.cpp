#include "btgn/twopiece.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace btgn {

namespace {

void check_finite_x(double x) {
  if (!std::isfinite(x)) throw std::domain_error("evaluation point must be finite");
}

// Shared piecewise machinery; Base supplies the standardized symmetric law.
template <class Base>
double tp_log_pdf_impl(const Base& g, double mu, double sigma, double psi, double log_weight,
                       double x) {
  // side scale: sigma/psi left of mu, sigma*psi right of it
  const double z = x <= mu ? (x - mu) * psi / sigma : (x - mu) / (sigma * psi);
  return log_weight - std::log(sigma) + g.log_pdf(z);
}

template <class Base>
double tp_cdf_impl(const Base& g, double mu, double sigma, double psi, double left_mass,
                   double x) {
  const double psi2 = psi * psi;
  if (x <= mu) {
    return 2.0 * g.cdf((x - mu) * psi / sigma) / (1.0 + psi2);
  }
  return left_mass + (2.0 * psi2 / (1.0 + psi2)) * (g.cdf((x - mu) / (sigma * psi)) - 0.5);
}

template <class Base>
double tp_quantile_impl(const Base& g, double mu, double sigma, double psi, double left_mass,
                        double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw std::domain_error("quantile level must lie in (0,1), got " + std::to_string(q));
  }
  const double psi2 = psi * psi;
  if (q <= left_mass) {
    return mu + sigma / psi * g.quantile(q * (1.0 + psi2) / 2.0);
  }
  return mu + sigma * psi * g.quantile(0.5 + (q * (1.0 + psi2) - 1.0) / (2.0 * psi2));
}

template <class Base>
double tp_sample_impl(const Base& g, double mu, double sigma, double psi, double left_mass,
                      Rng& rng) {
  const double z = std::abs(g.sample(rng));
  if (rng.uniform() < left_mass) return mu - sigma / psi * z;
  return mu + sigma * psi * z;
}

// Zero-overhead base over ShapeParams for the hot TPBTGN path.
struct ShapeBase {
  const ShapeParams& p;
  double log_pdf(double z) const { return btgn::log_pdf(p, z); }
  double cdf(double z) const { return btgn::cdf(p, z); }
  double quantile(double q) const { return btgn::quantile(p, q); }
  double sample(Rng& rng) const { return sample_one(p, rng); }
};

}  // namespace

TwoPieceParams::TwoPieceParams(double mu, double sigma, double alpha, double beta, double psi)
    : mu_(mu), sigma_(sigma), psi_(psi), shape_(alpha, beta) {
  if (!std::isfinite(mu)) throw std::invalid_argument("mu must be finite");
  if (!std::isfinite(sigma) || sigma <= 0.0) {
    throw std::invalid_argument("sigma must be positive and finite, got " + std::to_string(sigma));
  }
  if (!std::isfinite(psi) || psi <= 0.0) {
    throw std::invalid_argument("psi must be positive and finite, got " + std::to_string(psi));
  }
  log_weight_ = std::log(2.0 / (psi_ + 1.0 / psi_));
  left_mass_ = 1.0 / (1.0 + psi_ * psi_);
}

TwoPieceParams tptan_params(double mu, double sigma, double beta, double psi) {
  return TwoPieceParams(mu, sigma, 2.0, beta, psi);
}

double tp_log_pdf(const TwoPieceParams& p, double x) {
  check_finite_x(x);
  return tp_log_pdf_impl(ShapeBase{p.shape()}, p.mu(), p.sigma(), p.psi(), p.log_weight(), x);
}

double tp_pdf(const TwoPieceParams& p, double x) { return std::exp(tp_log_pdf(p, x)); }

double tp_cdf(const TwoPieceParams& p, double x) {
  check_finite_x(x);
  return tp_cdf_impl(ShapeBase{p.shape()}, p.mu(), p.sigma(), p.psi(), p.left_mass(), x);
}

double tp_quantile(const TwoPieceParams& p, double q) {
  return tp_quantile_impl(ShapeBase{p.shape()}, p.mu(), p.sigma(), p.psi(), p.left_mass(), q);
}

double tp_sample_one(const TwoPieceParams& p, Rng& rng) {
  return tp_sample_impl(ShapeBase{p.shape()}, p.mu(), p.sigma(), p.psi(), p.left_mass(), rng);
}

Eigen::ArrayXd tp_sample(const TwoPieceParams& p, Eigen::Index n, Rng& rng) {
  if (n < 0) throw std::invalid_argument("sample count must be non-negative");
  Eigen::ArrayXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) out[i] = tp_sample_one(p, rng);
  return out;
}

SymmetricBase btgn_base(const ShapeParams& p) {
  return SymmetricBase{
      [p](double z) { return log_pdf(p, z); },
      [p](double z) { return cdf(p, z); },
      [p](double q) { return quantile(p, q); },
      [p](Rng& rng) { return sample_one(p, rng); },
  };
}

SymmetricBase normal_base() {
  return SymmetricBase{
      [](double z) { return -0.5 * z * z - 0.91893853320467274178; },
      [](double z) { return 0.5 * std::erfc(-z * M_SQRT1_2); },
      [](double q) {
        // bisection on the standard normal CDF; plenty for the generic layer
        double lo = -40.0, hi = 40.0;
        for (int i = 0; i < 200; ++i) {
          const double mid = 0.5 * (lo + hi);
          (0.5 * std::erfc(-mid * M_SQRT1_2) < q ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
      },
      [](Rng& rng) { return rng.normal(); },
  };
}

namespace {
struct FnBase {
  const SymmetricBase& b;
  double log_pdf(double z) const { return b.log_pdf(z); }
  double cdf(double z) const { return b.cdf(z); }
  double quantile(double q) const { return b.quantile(q); }
  double sample(Rng& rng) const { return b.sample(rng); }
};
double tp_log_weight(double psi) { return std::log(2.0 / (psi + 1.0 / psi)); }
double tp_left_mass(double psi) { return 1.0 / (1.0 + psi * psi); }
}  // namespace

double two_piece_log_pdf(const SymmetricBase& base, double mu, double sigma, double psi,
                         double x) {
  return tp_log_pdf_impl(FnBase{base}, mu, sigma, psi, tp_log_weight(psi), x);
}

double two_piece_cdf(const SymmetricBase& base, double mu, double sigma, double psi, double x) {
  return tp_cdf_impl(FnBase{base}, mu, sigma, psi, tp_left_mass(psi), x);
}

double two_piece_quantile(const SymmetricBase& base, double mu, double sigma, double psi,
                          double q) {
  return tp_quantile_impl(FnBase{base}, mu, sigma, psi, tp_left_mass(psi), q);
}

double two_piece_sample_one(const SymmetricBase& base, double mu, double sigma, double psi,
                            Rng& rng) {
  return tp_sample_impl(FnBase{base}, mu, sigma, psi, tp_left_mass(psi), rng);
}

}  // namespace btgn
