#pragma once

#include <Eigen/Core>
#include <functional>
#include <string>
#include <vector>

#include "btgn/random.hpp"

namespace btgn {

struct ParamSpec {
  std::string name;
  bool positive;  // fitted on the log scale when true
};

/// Uniform model interface the fitting and comparison machinery works
/// against. Parameter vectors are in natural (untransformed) coordinates,
/// ordered as in `params`. log_likelihood returns -inf for inadmissible
/// parameter vectors instead of throwing, so optimizers can probe freely.
struct ModelContract {
  std::string name;
  std::vector<ParamSpec> params;
  std::function<double(const Eigen::ArrayXd& data, const Eigen::VectorXd& theta)> log_likelihood;
  std::function<double(double x, const Eigen::VectorXd& theta)> log_pdf;
  std::function<double(double x, const Eigen::VectorXd& theta)> cdf;  // null when unavailable
  std::function<Eigen::ArrayXd(Eigen::Index n, const Eigen::VectorXd& theta, Rng& rng)> sample;
  std::function<Eigen::VectorXd(const Eigen::ArrayXd& data)> initial_params;

  int n_free_params() const { return static_cast<int>(params.size()); }
};

ModelContract normal_model();     // mu, sigma
ModelContract laplace_model();    // mu, b
ModelContract student_t_model();  // mu, sigma, nu
ModelContract gn_model();         // mu, sigma, alpha
ModelContract btgn_model();       // mu, sigma, alpha, beta
ModelContract tptan_model();      // mu, sigma, beta, psi (alpha pinned to 2)
ModelContract tpbtgn_model();     // mu, sigma, alpha, beta, psi

const std::vector<std::string>& model_names();
ModelContract model_by_name(const std::string& name);

double sample_median(const Eigen::ArrayXd& values);
/// 1.4826 * median absolute deviation — robust scale start for fitting.
double robust_sigma(const Eigen::ArrayXd& values);

}  // namespace btgn
