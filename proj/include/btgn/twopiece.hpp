#pragma once

#include <Eigen/Core>
#include <functional>

#include "btgn/distribution.hpp"
#include "btgn/random.hpp"

namespace btgn {

/// Two-piece skewed BTGN (TPBTGN). A symmetric standard BTGN(alpha, beta) is
/// glued at the mode mu with side-dependent scales: sigma*psi to the right,
/// sigma/psi to the left, normalizer 2/(psi + 1/psi). psi > 1 skews right,
/// psi = 1 recovers the symmetric location-scale BTGN. Right-tail mass is
/// psi^2 / (1 + psi^2).
class TwoPieceParams {
 public:
  TwoPieceParams(double mu, double sigma, double alpha, double beta, double psi);

  double mu() const { return mu_; }
  double sigma() const { return sigma_; }
  double alpha() const { return shape_.alpha(); }
  double beta() const { return shape_.beta(); }
  double psi() const { return psi_; }
  const ShapeParams& shape() const { return shape_; }

  /// ln of the two-piece weight 2/(psi + 1/psi).
  double log_weight() const { return log_weight_; }
  /// P(X <= mu) = 1/(1 + psi^2).
  double left_mass() const { return left_mass_; }

 private:
  double mu_, sigma_, psi_;
  ShapeParams shape_;
  double log_weight_, left_mass_;
};

/// Two-piece tail adjusted normal (TPTAN): the alpha = 2 sub-model. Fitting
/// over TPTAN keeps alpha pinned, so it has 4 free parameters.
TwoPieceParams tptan_params(double mu, double sigma, double beta, double psi);

double tp_pdf(const TwoPieceParams& p, double x);
double tp_log_pdf(const TwoPieceParams& p, double x);
double tp_cdf(const TwoPieceParams& p, double x);
double tp_quantile(const TwoPieceParams& p, double q);
double tp_sample_one(const TwoPieceParams& p, Rng& rng);
Eigen::ArrayXd tp_sample(const TwoPieceParams& p, Eigen::Index n, Rng& rng);

/// Generic two-piece layer over any symmetric standardized base, so other
/// symmetric laws can be skewed the same way (two-piece normal, etc.).
struct SymmetricBase {
  std::function<double(double)> log_pdf;
  std::function<double(double)> cdf;
  std::function<double(double)> quantile;
  std::function<double(Rng&)> sample;
};

SymmetricBase btgn_base(const ShapeParams& p);
SymmetricBase normal_base();

double two_piece_log_pdf(const SymmetricBase& base, double mu, double sigma, double psi, double x);
double two_piece_cdf(const SymmetricBase& base, double mu, double sigma, double psi, double x);
double two_piece_quantile(const SymmetricBase& base, double mu, double sigma, double psi, double q);
double two_piece_sample_one(const SymmetricBase& base, double mu, double sigma, double psi,
                            Rng& rng);

}  // namespace btgn
