#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "btgn/models.hpp"
#include "btgn/specfun.hpp"
#include "support/quadrature.hpp"

using namespace btgn;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> vals) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index i = 0;
  for (double x : vals) v[i++] = x;
  return v;
}

double quad_norm(const ModelContract& m, const Eigen::VectorXd& theta) {
  return testsupport::integrate_real_line(
      [&](double x) { return std::exp(m.log_pdf(x, theta)); }, 1e-10, 1e-10);
}

}  // namespace

TEST_CASE("free parameter counts") {
  CHECK(normal_model().n_free_params() == 2);
  CHECK(laplace_model().n_free_params() == 2);
  CHECK(student_t_model().n_free_params() == 3);
  CHECK(gn_model().n_free_params() == 3);
  CHECK(btgn_model().n_free_params() == 4);
  CHECK(tptan_model().n_free_params() == 4);
  CHECK(tpbtgn_model().n_free_params() == 5);
}

TEST_CASE("model lookup by name") {
  for (const auto& name : model_names()) {
    CHECK(model_by_name(name).name == name);
  }
  CHECK_THROWS_AS(model_by_name("cauchy"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(model_by_name("nope"),
                       doctest::Contains("known models"), std::invalid_argument);
}

TEST_CASE("generalized normal density values") {
  const ModelContract gn = gn_model();
  CHECK(std::exp(gn.log_pdf(0.0, vec({0.0, 1.0, 2.0}))) ==
        doctest::Approx(1.0 / std::sqrt(M_PI)).epsilon(1e-13));
  for (double x : {-2.0, 0.0, 0.7}) {
    CHECK(std::exp(gn.log_pdf(x, vec({0.0, 1.0, 1.0}))) ==
          doctest::Approx(0.5 * std::exp(-std::abs(x))).epsilon(1e-13));
  }
  for (double alpha : {0.7, 1.0, 2.0, 4.0}) {
    CHECK(quad_norm(gn, vec({0.0, 1.0, alpha})) == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("normal, laplace, student_t basics") {
  const ModelContract normal = normal_model();
  CHECK(std::exp(normal.log_pdf(1.5, vec({1.5, 2.0}))) ==
        doctest::Approx(1.0 / (2.0 * std::sqrt(2.0 * M_PI))).epsilon(1e-13));
  CHECK(normal.cdf(1.5, vec({1.5, 2.0})) == doctest::Approx(0.5).epsilon(1e-14));

  const ModelContract t = student_t_model();
  // nu -> inf approaches the normal density
  double max_gap = 0.0;
  for (double x = -6.0; x <= 6.0; x += 0.05) {
    const double tp = std::exp(t.log_pdf(x, vec({0.0, 1.0, 1e6})));
    const double np = std::exp(normal.log_pdf(x, vec({0.0, 1.0})));
    max_gap = std::max(max_gap, std::abs(tp - np));
  }
  CHECK(max_gap < 1e-3);

  const ModelContract laplace = laplace_model();
  CHECK(laplace.cdf(0.0, vec({0.0, 1.0})) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("every zoo density integrates to one at three settings") {
  struct Setting {
    std::string model;
    Eigen::VectorXd theta;
  };
  const Setting settings[] = {
      {"normal", vec({0.0, 1.0})},      {"normal", vec({2.0, 0.5})},
      {"normal", vec({-1.0, 3.0})},     {"laplace", vec({0.0, 1.0})},
      {"laplace", vec({1.0, 0.4})},     {"laplace", vec({-2.0, 2.5})},
      {"student_t", vec({0.0, 1.0, 4.0})},  {"student_t", vec({1.0, 2.0, 2.5})},
      {"student_t", vec({-0.5, 0.7, 30.0})}, {"gn", vec({0.0, 1.0, 1.5})},
      {"gn", vec({1.0, 2.0, 0.8})},     {"gn", vec({-1.0, 0.6, 3.0})},
      {"btgn", vec({0.0, 1.0, 2.0, 1.0})},  {"btgn", vec({1.0, 2.0, 0.8, 2.2})},
      {"btgn", vec({-0.5, 0.9, 3.0, 1.5})}, {"tptan", vec({0.0, 1.0, 1.0, 1.5})},
      {"tptan", vec({1.0, 0.8, 2.5, 0.6})}, {"tptan", vec({-1.0, 1.2, 0.9, 1.0})},
      {"tpbtgn", vec({0.0, 1.0, 2.0, 1.0, 1.5})},
      {"tpbtgn", vec({0.5, 1.5, 1.3, 0.8, 0.7})},
      {"tpbtgn", vec({-1.0, 0.7, 3.0, 2.0, 2.0})},
  };
  for (const auto& s : settings) {
    INFO(s.model);
    CHECK(quad_norm(model_by_name(s.model), s.theta) == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("cdf endpoints for models that provide one") {
  for (const auto& name : {"normal", "laplace", "gn", "btgn", "tptan", "tpbtgn"}) {
    const ModelContract m = model_by_name(name);
    REQUIRE(static_cast<bool>(m.cdf));
    const Eigen::VectorXd theta = m.initial_params(Eigen::ArrayXd::LinSpaced(21, -2.0, 2.0));
    CHECK(m.cdf(-60.0, theta) < 1e-4);
    CHECK(m.cdf(60.0, theta) > 1.0 - 1e-4);
  }
  CHECK_FALSE(static_cast<bool>(student_t_model().cdf));
}

TEST_CASE("btgn at alpha=beta=2 matches the normal likelihood at sigma/sqrt(2)") {
  Rng rng(3);
  Eigen::ArrayXd data(200);
  for (Eigen::Index i = 0; i < data.size(); ++i) data[i] = rng.normal() * 1.3 + 0.4;
  const double ll_btgn = btgn_model().log_likelihood(data, vec({0.4, 1.3, 2.0, 2.0}));
  const double ll_normal = normal_model().log_likelihood(data, vec({0.4, 1.3 * M_SQRT1_2}));
  CHECK(ll_btgn == doctest::Approx(ll_normal).epsilon(1e-10));
}

TEST_CASE("inadmissible parameter vectors yield -inf, not exceptions") {
  Eigen::ArrayXd data = Eigen::ArrayXd::LinSpaced(11, -1.0, 1.0);
  CHECK(normal_model().log_likelihood(data, vec({0.0, -1.0})) ==
        -std::numeric_limits<double>::infinity());
  CHECK(tpbtgn_model().log_likelihood(data, vec({0.0, 1.0, -2.0, 1.0, 1.0})) ==
        -std::numeric_limits<double>::infinity());
  CHECK(gn_model().log_likelihood(data, vec({0.0, 1.0, std::nan("")})) ==
        -std::numeric_limits<double>::infinity());
}

TEST_CASE("samplers honor their parameters") {
  const Eigen::Index n = 60000;
  {
    Rng rng(31);
    const Eigen::ArrayXd draws = gn_model().sample(n, vec({1.0, 2.0, 1.5}), rng);
    CHECK(std::abs(draws.mean() - 1.0) < 0.05);
  }
  {
    Rng rng(32);
    const Eigen::ArrayXd draws = student_t_model().sample(n, vec({0.0, 1.0, 8.0}), rng);
    // var = nu/(nu-2) = 4/3
    const double var = (draws - draws.mean()).square().mean();
    CHECK(var == doctest::Approx(4.0 / 3.0).epsilon(0.1));
  }
  {
    Rng rng(33);
    const Eigen::ArrayXd draws = laplace_model().sample(n, vec({-1.0, 0.5}), rng);
    CHECK(std::abs(draws.mean() + 1.0) < 0.02);
    CHECK((draws < -1.0).count() > n / 2 - 3 * std::sqrt(0.25 * n));
  }
}

TEST_CASE("robust start statistics") {
  Eigen::ArrayXd odd(5);
  odd << 5.0, 1.0, 3.0, 2.0, 4.0;
  CHECK(sample_median(odd) == 3.0);
  Eigen::ArrayXd even(4);
  even << 4.0, 1.0, 2.0, 3.0;
  CHECK(sample_median(even) == 2.5);
  // MAD of {1..5} about 3 is 1 -> 1.4826
  CHECK(robust_sigma(odd) == doctest::Approx(1.4826).epsilon(1e-12));
}
