#include "btgn/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "btgn/distribution.hpp"
#include "btgn/specfun.hpp"
#include "btgn/twopiece.hpp"

namespace btgn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kHalfLog2Pi = 0.91893853320467274178;
constexpr double kLn2 = 0.69314718055994530942;

bool all_finite(const Eigen::VectorXd& theta) {
  return theta.allFinite();
}

bool positive_ok(const std::vector<ParamSpec>& specs, const Eigen::VectorXd& theta) {
  for (int i = 0; i < static_cast<int>(specs.size()); ++i) {
    if (specs[i].positive && !(theta[i] > 0.0)) return false;
  }
  return true;
}

Eigen::VectorXd make_vec(std::initializer_list<double> vals) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index i = 0;
  for (double x : vals) v[i++] = x;
  return v;
}

Eigen::ArrayXd sample_loop(Eigen::Index n, const std::function<double(Rng&)>& draw, Rng& rng) {
  if (n < 0) throw std::invalid_argument("sample count must be non-negative");
  Eigen::ArrayXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) out[i] = draw(rng);
  return out;
}

double gn_log_pdf_one(double x, double mu, double sigma, double alpha, double log_gamma_inv_alpha) {
  const double z = std::abs((x - mu) / sigma);
  return std::log(alpha) - kLn2 - std::log(sigma) - log_gamma_inv_alpha - std::pow(z, alpha);
}

}  // namespace

ModelContract normal_model() {
  ModelContract m;
  m.name = "normal";
  m.params = {{"mu", false}, {"sigma", true}};
  m.log_likelihood = [specs = m.params](const Eigen::ArrayXd& data, const Eigen::VectorXd& t) {
    if (!all_finite(t) || !positive_ok(specs, t)) return -kInf;
    const double mu = t[0], sigma = t[1];
    const Eigen::ArrayXd z = (data - mu) / sigma;
    return -0.5 * z.square().sum() -
           static_cast<double>(data.size()) * (std::log(sigma) + kHalfLog2Pi);
  };
  m.log_pdf = [](double x, const Eigen::VectorXd& t) {
    const double z = (x - t[0]) / t[1];
    return -0.5 * z * z - std::log(t[1]) - kHalfLog2Pi;
  };
  m.cdf = [](double x, const Eigen::VectorXd& t) {
    return 0.5 * std::erfc(-(x - t[0]) / t[1] * M_SQRT1_2);
  };
  m.sample = [](Eigen::Index n, const Eigen::VectorXd& t, Rng& rng) {
    return sample_loop(n, [&](Rng& r) { return t[0] + t[1] * r.normal(); }, rng);
  };
  m.initial_params = [](const Eigen::ArrayXd& data) {
    return make_vec({sample_median(data), robust_sigma(data)});
  };
  return m;
}

ModelContract laplace_model() {
  ModelContract m;
  m.name = "laplace";
  m.params = {{"mu", false}, {"b", true}};
  m.log_likelihood = [specs = m.params](const Eigen::ArrayXd& data, const Eigen::VectorXd& t) {
    if (!all_finite(t) || !positive_ok(specs, t)) return -kInf;
    const double mu = t[0], b = t[1];
    return -((data - mu).abs() / b).sum() -
           static_cast<double>(data.size()) * (kLn2 + std::log(b));
  };
  m.log_pdf = [](double x, const Eigen::VectorXd& t) {
    return -std::abs(x - t[0]) / t[1] - kLn2 - std::log(t[1]);
  };
  m.cdf = [](double x, const Eigen::VectorXd& t) {
    const double z = (x - t[0]) / t[1];
    return z < 0.0 ? 0.5 * std::exp(z) : 1.0 - 0.5 * std::exp(-z);
  };
  m.sample = [](Eigen::Index n, const Eigen::VectorXd& t, Rng& rng) {
    return sample_loop(
        n,
        [&](Rng& r) {
          const double u = r.uniform();
          return u < 0.5 ? t[0] + t[1] * std::log(2.0 * u) : t[0] - t[1] * std::log(2.0 * (1.0 - u));
        },
        rng);
  };
  m.initial_params = [](const Eigen::ArrayXd& data) {
    return make_vec({sample_median(data), robust_sigma(data)});
  };
  return m;
}

ModelContract student_t_model() {
  ModelContract m;
  m.name = "student_t";
  m.params = {{"mu", false}, {"sigma", true}, {"nu", true}};
  m.log_likelihood = [specs = m.params](const Eigen::ArrayXd& data, const Eigen::VectorXd& t) {
    if (!all_finite(t) || !positive_ok(specs, t)) return -kInf;
    const double mu = t[0], sigma = t[1], nu = t[2];
    const double norm = log_gamma(0.5 * (nu + 1.0)) - log_gamma(0.5 * nu) -
                        0.5 * std::log(nu * M_PI) - std::log(sigma);
    const Eigen::ArrayXd z = (data - mu) / sigma;
    return static_cast<double>(data.size()) * norm -
           0.5 * (nu + 1.0) * (z.square() / nu).log1p().sum();
  };
  m.log_pdf = [](double x, const Eigen::VectorXd& t) {
    const double mu = t[0], sigma = t[1], nu = t[2];
    const double z = (x - mu) / sigma;
    return log_gamma(0.5 * (nu + 1.0)) - log_gamma(0.5 * nu) - 0.5 * std::log(nu * M_PI) -
           std::log(sigma) - 0.5 * (nu + 1.0) * std::log1p(z * z / nu);
  };
  m.sample = [](Eigen::Index n, const Eigen::VectorXd& t, Rng& rng) {
    return sample_loop(
        n,
        [&](Rng& r) {
          const double chi2 = 2.0 * gamma_sample(0.5 * t[2], r);
          return t[0] + t[1] * r.normal() / std::sqrt(chi2 / t[2]);
        },
        rng);
  };
  m.initial_params = [](const Eigen::ArrayXd& data) {
    return make_vec({sample_median(data), robust_sigma(data), 5.0});
  };
  return m;
}

ModelContract gn_model() {
  ModelContract m;
  m.name = "gn";
  m.params = {{"mu", false}, {"sigma", true}, {"alpha", true}};
  m.log_likelihood = [specs = m.params](const Eigen::ArrayXd& data, const Eigen::VectorXd& t) {
    if (!all_finite(t) || !positive_ok(specs, t)) return -kInf;
    const double mu = t[0], sigma = t[1], alpha = t[2];
    const double norm = std::log(alpha) - kLn2 - std::log(sigma) - log_gamma(1.0 / alpha);
    const Eigen::ArrayXd z = ((data - mu) / sigma).abs();
    return static_cast<double>(data.size()) * norm - z.pow(alpha).sum();
  };
  m.log_pdf = [](double x, const Eigen::VectorXd& t) {
    return gn_log_pdf_one(x, t[0], t[1], t[2], log_gamma(1.0 / t[2]));
  };
  m.cdf = [](double x, const Eigen::VectorXd& t) {
    const double z = (x - t[0]) / t[1];
    const double q = reg_gamma_q(1.0 / t[2], std::pow(std::abs(z), t[2]));
    return z < 0.0 ? 0.5 * q : 1.0 - 0.5 * q;
  };
  m.sample = [](Eigen::Index n, const Eigen::VectorXd& t, Rng& rng) {
    return sample_loop(
        n,
        [&](Rng& r) {
          const double w = std::pow(gamma_sample(1.0 / t[2], r), 1.0 / t[2]);
          return t[0] + t[1] * (r.uniform() < 0.5 ? -w : w);
        },
        rng);
  };
  m.initial_params = [](const Eigen::ArrayXd& data) {
    return make_vec({sample_median(data), robust_sigma(data), 2.0});
  };
  return m;
}

ModelContract btgn_model() {
  ModelContract m;
  m.name = "btgn";
  m.params = {{"mu", false}, {"sigma", true}, {"alpha", true}, {"beta", true}};
  m.log_likelihood = [specs = m.params](const Eigen::ArrayXd& data, const Eigen::VectorXd& t) {
    if (!all_finite(t) || !positive_ok(specs, t)) return -kInf;
    const LocScaleParams p(t[0], t[1], t[2], t[3]);
    double ll = 0.0;
    for (Eigen::Index i = 0; i < data.size(); ++i) ll += log_pdf(p, data[i]);
    return ll;
  };
  m.log_pdf = [](double x, const Eigen::VectorXd& t) {
    return log_pdf(LocScaleParams(t[0], t[1], t[2], t[3]), x);
  };
  m.cdf = [](double x, const Eigen::VectorXd& t) {
    return cdf(LocScaleParams(t[0], t[1], t[2], t[3]), x);
  };
  m.sample = [](Eigen::Index n, const Eigen::VectorXd& t, Rng& rng) {
    return sample(LocScaleParams(t[0], t[1], t[2], t[3]), n, rng);
  };
  m.initial_params = [](const Eigen::ArrayXd& data) {
    return make_vec({sample_median(data), robust_sigma(data), 2.0, 2.0});
  };
  return m;
}

namespace {

ModelContract two_piece_btgn_contract(std::string name, bool fixed_alpha) {
  // fixed_alpha pins alpha = 2 (TPTAN); otherwise alpha is free (TPBTGN)
  ModelContract m;
  m.name = std::move(name);
  if (fixed_alpha) {
    m.params = {{"mu", false}, {"sigma", true}, {"beta", true}, {"psi", true}};
  } else {
    m.params = {{"mu", false}, {"sigma", true}, {"alpha", true}, {"beta", true}, {"psi", true}};
  }
  auto to_params = [fixed_alpha](const Eigen::VectorXd& t) {
    return fixed_alpha ? tptan_params(t[0], t[1], t[2], t[3])
                       : TwoPieceParams(t[0], t[1], t[2], t[3], t[4]);
  };
  m.log_likelihood = [specs = m.params, to_params](const Eigen::ArrayXd& data,
                                                   const Eigen::VectorXd& t) {
    if (!all_finite(t) || !positive_ok(specs, t)) return -kInf;
    const TwoPieceParams p = to_params(t);
    double ll = 0.0;
    for (Eigen::Index i = 0; i < data.size(); ++i) ll += tp_log_pdf(p, data[i]);
    return ll;
  };
  m.log_pdf = [to_params](double x, const Eigen::VectorXd& t) {
    return tp_log_pdf(to_params(t), x);
  };
  m.cdf = [to_params](double x, const Eigen::VectorXd& t) { return tp_cdf(to_params(t), x); };
  m.sample = [to_params](Eigen::Index n, const Eigen::VectorXd& t, Rng& rng) {
    return tp_sample(to_params(t), n, rng);
  };
  m.initial_params = [fixed_alpha](const Eigen::ArrayXd& data) {
    const double med = sample_median(data);
    const double s0 = robust_sigma(data);
    return fixed_alpha ? make_vec({med, s0, 2.0, 1.0}) : make_vec({med, s0, 2.0, 2.0, 1.0});
  };
  return m;
}

}  // namespace

ModelContract tptan_model() { return two_piece_btgn_contract("tptan", true); }

ModelContract tpbtgn_model() { return two_piece_btgn_contract("tpbtgn", false); }

const std::vector<std::string>& model_names() {
  static const std::vector<std::string> names = {"normal", "laplace", "student_t", "gn",
                                                 "btgn",   "tptan",   "tpbtgn"};
  return names;
}

ModelContract model_by_name(const std::string& name) {
  if (name == "normal") return normal_model();
  if (name == "laplace") return laplace_model();
  if (name == "student_t") return student_t_model();
  if (name == "gn") return gn_model();
  if (name == "btgn") return btgn_model();
  if (name == "tptan") return tptan_model();
  if (name == "tpbtgn") return tpbtgn_model();
  std::string known;
  for (const auto& n : model_names()) known += (known.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown model '" + name + "'; known models: " + known);
}

double sample_median(const Eigen::ArrayXd& values) {
  if (values.size() == 0) throw std::invalid_argument("median of empty data");
  std::vector<double> v(values.data(), values.data() + values.size());
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double robust_sigma(const Eigen::ArrayXd& values) {
  const double med = sample_median(values);
  const double mad = sample_median((values - med).abs());
  return 1.4826 * mad;
}

}  // namespace btgn
