#include "btgn/fit.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace btgn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Eigen::VectorXd to_transformed(const std::vector<ParamSpec>& specs, const Eigen::VectorXd& nat) {
  Eigen::VectorXd t = nat;
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    if (specs[i].positive) t[i] = std::log(nat[i]);
  }
  return t;
}

Eigen::VectorXd to_natural(const std::vector<ParamSpec>& specs, const Eigen::VectorXd& t) {
  Eigen::VectorXd nat = t;
  for (Eigen::Index i = 0; i < nat.size(); ++i) {
    if (specs[i].positive) nat[i] = std::exp(t[i]);
  }
  return nat;
}

struct SimplexResult {
  Eigen::VectorXd best;
  double best_value = kInf;
  bool converged = false;
  std::int64_t n_evaluations = 0;
};

// Standard Nelder-Mead (reflection 1, expansion 2, contraction 1/2,
// shrink 1/2) minimizing f over R^n; convergence when the spread of vertex
// values drops below tol.
template <class F>
SimplexResult nelder_mead(F&& f, const Eigen::VectorXd& start, const Eigen::VectorXd& step,
                          int max_iter, double tol) {
  const Eigen::Index n = start.size();
  SimplexResult res;

  std::vector<Eigen::VectorXd> x(n + 1, start);
  std::vector<double> fx(n + 1);
  for (Eigen::Index i = 0; i < n; ++i) x[i + 1][i] += step[i];
  for (Eigen::Index i = 0; i <= n; ++i) {
    fx[i] = f(x[i]);
    ++res.n_evaluations;
  }

  std::vector<Eigen::Index> order(n + 1);
  for (int iter = 0; iter < max_iter; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](Eigen::Index a, Eigen::Index b) { return fx[a] < fx[b]; });
    const Eigen::Index best = order[0], second_worst = order[n - 1], worst = order[n];

    if (std::isfinite(fx[best]) && fx[worst] - fx[best] < tol) {
      res.converged = true;
      break;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i <= n; ++i) {
      if (i != worst) centroid += x[i];
    }
    centroid /= static_cast<double>(n);

    const Eigen::VectorXd reflected = centroid + (centroid - x[worst]);
    const double f_reflected = f(reflected);
    ++res.n_evaluations;

    if (f_reflected < fx[best]) {
      const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - x[worst]);
      const double f_expanded = f(expanded);
      ++res.n_evaluations;
      if (f_expanded < f_reflected) {
        x[worst] = expanded;
        fx[worst] = f_expanded;
      } else {
        x[worst] = reflected;
        fx[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < fx[second_worst]) {
      x[worst] = reflected;
      fx[worst] = f_reflected;
      continue;
    }
    // contraction: outside toward the reflected point, inside toward the worst
    const bool outside = f_reflected < fx[worst];
    const Eigen::VectorXd contracted =
        outside ? centroid + 0.5 * (reflected - centroid) : centroid + 0.5 * (x[worst] - centroid);
    const double f_contracted = f(contracted);
    ++res.n_evaluations;
    if (f_contracted < (outside ? f_reflected : fx[worst])) {
      x[worst] = contracted;
      fx[worst] = f_contracted;
      continue;
    }
    for (Eigen::Index i = 0; i <= n; ++i) {  // shrink toward the best vertex
      if (i == best) continue;
      x[i] = x[best] + 0.5 * (x[i] - x[best]);
      fx[i] = f(x[i]);
      ++res.n_evaluations;
    }
  }

  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i <= n; ++i) {
    if (fx[i] < fx[best]) best = i;
  }
  res.best = x[best];
  res.best_value = fx[best];
  return res;
}

}  // namespace

Eigen::VectorXd FitReport::estimate_vector() const {
  Eigen::VectorXd v(static_cast<Eigen::Index>(estimates.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = estimates[i].second;
  return v;
}

double neg_log_likelihood(const ModelContract& model, const Eigen::VectorXd& theta,
                          const Eigen::ArrayXd& data) {
  if (data.size() == 0) throw std::domain_error("log-likelihood of empty data");
  if (theta.size() != model.n_free_params()) {
    throw std::invalid_argument("parameter vector length does not match model '" + model.name +
                                "'");
  }
  const double ll = model.log_likelihood(data, theta);
  return std::isfinite(ll) ? -ll : kInf;
}

FitReport mle_fit(const ModelContract& model, const Eigen::ArrayXd& data,
                  const FitOptions& options) {
  const int k = model.n_free_params();
  if (data.size() <= k) {
    throw std::invalid_argument("fitting '" + model.name + "' needs more than " +
                                std::to_string(k) + " observations, got " +
                                std::to_string(data.size()));
  }
  if (!data.isFinite().all()) throw std::invalid_argument("data contains non-finite values");

  const auto& specs = model.params;
  const Eigen::VectorXd start_nat = model.initial_params(data);
  const Eigen::VectorXd start_t = to_transformed(specs, start_nat);
  const double sigma0 = std::max(robust_sigma(data), 1e-8);

  Eigen::VectorXd step(k);
  for (int i = 0; i < k; ++i) step[i] = specs[i].positive ? 0.25 : 0.25 * sigma0;

  auto objective = [&](const Eigen::VectorXd& t) {
    return neg_log_likelihood(model, to_natural(specs, t), data);
  };

  Rng jitter_rng(options.seed);
  SimplexResult best;
  std::int64_t total_evaluations = 0;
  bool any = false;
  for (int r = 0; r < std::max(options.n_restarts, 1); ++r) {
    Eigen::VectorXd t0 = start_t;
    if (r > 0) {
      for (int i = 0; i < k; ++i) {
        // log-normal jitter (sd 0.3) on positive parameters, 0.5*sigma0 on mu
        t0[i] += specs[i].positive ? 0.3 * jitter_rng.normal()
                                   : 0.5 * sigma0 * jitter_rng.normal();
      }
    }
    SimplexResult res = nelder_mead(objective, t0, step, options.max_iter, options.tol);
    total_evaluations += res.n_evaluations;
    if (!any || res.best_value < best.best_value ||
        (res.best_value == best.best_value && res.converged && !best.converged)) {
      best = std::move(res);
      any = true;
    }
  }

  FitReport report;
  report.model_name = model.name;
  report.n_free_params = k;
  report.n_obs = data.size();
  report.n_evaluations = total_evaluations;
  report.restarts_used = std::max(options.n_restarts, 1);
  report.converged = best.converged && std::isfinite(best.best_value);
  report.log_likelihood = -best.best_value;
  const Eigen::VectorXd estimates = to_natural(specs, best.best);
  for (int i = 0; i < k; ++i) report.estimates.emplace_back(specs[i].name, estimates[i]);
  return report;
}

StdErrors standard_errors(const ModelContract& model, const FitReport& fit,
                          const Eigen::ArrayXd& data) {
  StdErrors out;
  if (!fit.converged) {
    out.message = "fit did not converge";
    return out;
  }
  const int k = model.n_free_params();
  const Eigen::VectorXd theta = fit.estimate_vector();

  Eigen::VectorXd h(k);
  for (int i = 0; i < k; ++i) h[i] = 1e-4 * std::max(std::abs(theta[i]), 1.0);

  auto nll = [&](const Eigen::VectorXd& t) { return neg_log_likelihood(model, t, data); };
  const double f0 = nll(theta);

  Eigen::MatrixXd hess(k, k);
  for (int i = 0; i < k; ++i) {
    Eigen::VectorXd tp = theta, tm = theta;
    tp[i] += h[i];
    tm[i] -= h[i];
    hess(i, i) = (nll(tp) - 2.0 * f0 + nll(tm)) / (h[i] * h[i]);
    for (int j = i + 1; j < k; ++j) {
      Eigen::VectorXd tpp = theta, tpm = theta, tmp = theta, tmm = theta;
      tpp[i] += h[i]; tpp[j] += h[j];
      tpm[i] += h[i]; tpm[j] -= h[j];
      tmp[i] -= h[i]; tmp[j] += h[j];
      tmm[i] -= h[i]; tmm[j] -= h[j];
      hess(i, j) = hess(j, i) = (nll(tpp) - nll(tpm) - nll(tmp) + nll(tmm)) / (4.0 * h[i] * h[j]);
    }
  }
  if (!hess.allFinite()) {
    out.message = "Hessian evaluation left the admissible parameter region";
    return out;
  }

  Eigen::LLT<Eigen::MatrixXd> llt(hess);
  if (llt.info() != Eigen::Success) {
    out.message = "Hessian is not positive definite";
    return out;
  }
  const Eigen::MatrixXd cov = llt.solve(Eigen::MatrixXd::Identity(k, k));
  for (int i = 0; i < k; ++i) {
    if (!(cov(i, i) >= 0.0)) {
      out.values.clear();
      out.message = "inverse Hessian has a negative diagonal entry";
      return out;
    }
    out.values.emplace_back(model.params[i].name, std::sqrt(cov(i, i)));
  }
  out.available = true;
  return out;
}

}  // namespace btgn
