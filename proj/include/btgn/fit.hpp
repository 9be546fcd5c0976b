#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "btgn/models.hpp"

namespace btgn {

/// Default seed used everywhere a seed is not given explicitly, so any run is
/// reproducible out of the box.
inline constexpr std::uint64_t kDefaultSeed = 42;

struct FitOptions {
  int max_iter = 2000;       // simplex iterations per restart
  double tol = 1e-8;         // convergence: spread of simplex log-likelihoods
  int n_restarts = 5;        // moment start plus jittered starts
  std::uint64_t seed = kDefaultSeed;
};

struct FitReport {
  std::string model_name;
  std::vector<std::pair<std::string, double>> estimates;
  double log_likelihood = 0.0;
  int n_free_params = 0;
  std::int64_t n_obs = 0;
  bool converged = false;
  std::int64_t n_evaluations = 0;
  int restarts_used = 0;

  Eigen::VectorXd estimate_vector() const;
};

/// Negative log-likelihood, evaluated in log space throughout. Returns +inf
/// (a flagged sentinel, detectable by the caller) when the parameter vector is
/// inadmissible or some point's log-density is irrecoverably -inf.
double neg_log_likelihood(const ModelContract& model, const Eigen::VectorXd& theta,
                          const Eigen::ArrayXd& data);

/// Maximum-likelihood fit by Nelder-Mead over transformed coordinates (log
/// scale for positive parameters). Multi-start: the moment-based start plus
/// n_restarts-1 jittered ones; the best restart wins. Deterministic under a
/// fixed seed. Never reports a log-likelihood below the starting point's.
FitReport mle_fit(const ModelContract& model, const Eigen::ArrayXd& data,
                  const FitOptions& options = {});

struct StdErrors {
  bool available = false;
  std::vector<std::pair<std::string, double>> values;
  std::string message;  // set when unavailable
};

/// Asymptotic standard errors from the inverse numeric Hessian (central
/// differences) of the negative log-likelihood at the optimum. A Hessian that
/// is not positive definite is reported as unavailable, never masked.
StdErrors standard_errors(const ModelContract& model, const FitReport& fit,
                          const Eigen::ArrayXd& data);

}  // namespace btgn
