// btgn — body-tail generalized normal distribution toolkit.
//
// Subcommands: eval, fit, compare, sample, fetch, plotdata. Every run is
// deterministic given its flags, inputs, and seed; outputs embed the resolved
// configuration and are written atomically.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "btgn/distribution.hpp"
#include "btgn/fetch.hpp"
#include "btgn/fit.hpp"
#include "btgn/model_selection.hpp"
#include "btgn/models.hpp"
#include "btgn/series.hpp"
#include "btgn/twopiece.hpp"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 1;
constexpr int kExitError = 2;
constexpr int kExitNotConverged = 3;

std::string fmt(double v, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out) throw std::runtime_error("cannot write output file '" + path + "'");
  }
  fs::rename(tmp, target);
}

// ---------------------------------------------------------------------------
// shared flag groups

struct ParamFlags {
  double mu = 0.0, sigma = 1.0, alpha = 2.0, beta = 2.0, psi = 1.0, nu = 5.0, b = 1.0;
  std::map<std::string, bool> given;

  void attach(CLI::App* cmd) {
    auto track = [this, cmd](const std::string& flag, double& slot, const std::string& help) {
      cmd->add_option(flag, slot, help)->each([this, flag](const std::string&) {
        given[flag.substr(2)] = true;
      });
    };
    track("--mu", mu, "location parameter");
    track("--sigma", sigma, "scale parameter");
    track("--alpha", alpha, "body shape parameter");
    track("--beta", beta, "tail shape parameter");
    track("--psi", psi, "skewness parameter (two-piece models)");
    track("--nu", nu, "degrees of freedom (student_t)");
    track("--b", b, "scale parameter (laplace)");
  }

  double by_name(const std::string& name) const {
    if (name == "mu") return mu;
    if (name == "sigma") return sigma;
    if (name == "alpha") return alpha;
    if (name == "beta") return beta;
    if (name == "psi") return psi;
    if (name == "nu") return nu;
    if (name == "b") return b;
    throw std::logic_error("no flag for parameter '" + name + "'");
  }

  bool any_given() const { return !given.empty(); }

  Eigen::VectorXd vector_for(const btgn::ModelContract& model) const {
    Eigen::VectorXd theta(model.n_free_params());
    for (int i = 0; i < model.n_free_params(); ++i) theta[i] = by_name(model.params[i].name);
    return theta;
  }

  json to_json(const btgn::ModelContract& model) const {
    json out = json::object();
    for (const auto& p : model.params) out[p.name] = by_name(p.name);
    return out;
  }
};

struct DataFlags {
  std::string path;
  std::string column = "0";
  bool no_header = false;
  bool skip_bad_rows = false;
  std::string delimiter = ",";

  void attach(CLI::App* cmd, bool required = true) {
    auto* opt = cmd->add_option("--data", path, "input CSV file");
    if (required) opt->required();
    cmd->add_option("--column", column, "column name or zero-based index (default 0)");
    cmd->add_flag("--no-header", no_header, "treat the first row as data");
    cmd->add_flag("--skip-bad-rows", skip_bad_rows, "drop unparsable rows with a warning");
    cmd->add_option("--delimiter", delimiter, "field delimiter (default ,)");
  }

  Eigen::ArrayXd load() const {
    btgn::CsvOptions options;
    options.has_header = !no_header;
    options.skip_bad_rows = skip_bad_rows;
    if (delimiter.size() != 1) throw std::runtime_error("delimiter must be a single character");
    options.delimiter = delimiter[0];
    btgn::ColumnRef ref;
    try {
      ref = std::stoi(column);
    } catch (const std::exception&) {
      ref = column;
    }
    const btgn::CsvColumn col = btgn::read_csv_column(path, ref, options);
    if (!col.skipped_lines.empty()) {
      std::cerr << "warning: skipped " << col.skipped_lines.size()
                << " unparsable row(s) in " << path << " (first at line "
                << col.skipped_lines.front() << ")\n";
    }
    return col.series.values;
  }

  json to_json() const {
    return json{{"path", path},
                {"column", column},
                {"has_header", !no_header},
                {"skip_bad_rows", skip_bad_rows},
                {"delimiter", delimiter}};
  }
};

struct FitFlags {
  btgn::FitOptions options;
  void attach(CLI::App* cmd) {
    cmd->add_option("--restarts", options.n_restarts, "number of optimizer starts (default 5)");
    cmd->add_option("--tol", options.tol, "simplex convergence tolerance (default 1e-8)");
    cmd->add_option("--max-iter", options.max_iter, "simplex iterations per start (default 2000)");
    cmd->add_option("--seed", options.seed, "random seed (default 42)");
  }
  json to_json() const {
    return json{{"restarts", options.n_restarts},
                {"tol", options.tol},
                {"max_iter", options.max_iter},
                {"seed", options.seed}};
  }
};

std::string csv_with_config(const json& config, const std::string& body) {
  return "# config: " + config.dump() + "\n" + body;
}

json fit_report_json(const btgn::FitReport& report, const btgn::StdErrors& se) {
  json estimates = json::object();
  for (const auto& [name, value] : report.estimates) estimates[name] = value;
  json out{{"model", report.model_name},
           {"estimates", estimates},
           {"log_likelihood", report.log_likelihood},
           {"n_free_params", report.n_free_params},
           {"n_obs", report.n_obs},
           {"bic", btgn::bic(report.log_likelihood, report.n_free_params,
                             static_cast<double>(report.n_obs))},
           {"converged", report.converged},
           {"n_evaluations", report.n_evaluations},
           {"restarts_used", report.restarts_used}};
  if (se.available) {
    json errs = json::object();
    for (const auto& [name, value] : se.values) errs[name] = value;
    out["standard_errors"] = errs;
  } else {
    out["standard_errors"] = nullptr;
    out["standard_errors_note"] = se.message;
  }
  return out;
}

// ---------------------------------------------------------------------------
// eval

struct EvalArgs {
  std::string model = "btgn";
  ParamFlags params;
  double from = -4.0, to = 4.0;
  int points = 101;
  bool kernel_derivative = false;
  std::string format = "csv";
  std::string output;
};

int run_eval(const EvalArgs& args) {
  if (args.points < 1) throw std::runtime_error("--points must be at least 1");
  if (!(args.to >= args.from)) throw std::runtime_error("--to must not be below --from");

  json config{{"subcommand", "eval"},    {"model", args.model},
              {"from", args.from},       {"to", args.to},
              {"points", args.points},   {"kernel_derivative", args.kernel_derivative},
              {"format", args.format},   {"output", args.output}};

  Eigen::ArrayXd grid = args.points == 1
                            ? Eigen::ArrayXd::Constant(1, args.from)
                            : Eigen::ArrayXd::LinSpaced(args.points, args.from, args.to);

  std::ostringstream body;
  json rows = json::array();
  if (args.kernel_derivative) {
    const btgn::ShapeParams shape(args.params.alpha, args.params.beta);
    config["params"] = json{{"alpha", shape.alpha()}, {"beta", shape.beta()}};
    body << "x,kernel_derivative\n";
    for (double x : grid) {
      const double k = btgn::derivative_kernel(shape, x);
      body << fmt(x) << "," << fmt(k) << "\n";
      rows.push_back(json{{"x", x}, {"kernel_derivative", k}});
    }
  } else {
    const btgn::ModelContract model = btgn::model_by_name(args.model);
    const Eigen::VectorXd theta = args.params.vector_for(model);
    config["params"] = args.params.to_json(model);
    const bool has_cdf = static_cast<bool>(model.cdf);
    body << (has_cdf ? "x,pdf,cdf,log_pdf\n" : "x,pdf,log_pdf\n");
    for (double x : grid) {
      const double lp = model.log_pdf(x, theta);
      json row{{"x", x}, {"pdf", std::exp(lp)}, {"log_pdf", lp}};
      body << fmt(x) << "," << fmt(std::exp(lp));
      if (has_cdf) {
        const double c = model.cdf(x, theta);
        body << "," << fmt(c);
        row["cdf"] = c;
      }
      body << "," << fmt(lp) << "\n";
      rows.push_back(row);
    }
  }

  if (args.format == "json") {
    write_output(args.output, json{{"config", config}, {"grid", rows}}.dump(2) + "\n");
  } else {
    write_output(args.output, csv_with_config(config, body.str()));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// fit

struct FitArgs {
  std::string model;
  DataFlags data;
  FitFlags fit;
  bool no_standard_errors = false;
  std::string format = "json";
  std::string output;
};

int run_fit(const FitArgs& args) {
  const btgn::ModelContract model = btgn::model_by_name(args.model);
  const Eigen::ArrayXd data = args.data.load();

  const btgn::FitReport report = btgn::mle_fit(model, data, args.fit.options);
  btgn::StdErrors se;
  if (!args.no_standard_errors) {
    se = btgn::standard_errors(model, report, data);
  } else {
    se.message = "disabled by flag";
  }

  json config{{"subcommand", "fit"},
              {"model", args.model},
              {"data", args.data.to_json()},
              {"fit", args.fit.to_json()},
              {"standard_errors", !args.no_standard_errors},
              {"format", args.format},
              {"output", args.output}};
  const json out{{"config", config}, {"report", fit_report_json(report, se)}};
  write_output(args.output, out.dump(2) + "\n");

  if (!report.converged) {
    std::cerr << "fit did not converge after " << report.restarts_used << " restart(s)\n";
    return kExitNotConverged;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// compare

struct CompareArgs {
  std::vector<std::string> models;
  DataFlags data;
  FitFlags fit;
  std::string reference = "best";
  std::vector<std::string> external;
  std::string format = "csv";
  std::string output;
};

int run_compare(const CompareArgs& args) {
  std::vector<btgn::ModelContract> models;
  for (const auto& name : args.models) models.push_back(btgn::model_by_name(name));

  std::vector<btgn::ExternalModelRow> external;
  for (const auto& spec : args.external) {
    const auto last = spec.rfind(':');
    const auto mid = last == std::string::npos ? std::string::npos : spec.rfind(':', last - 1);
    if (mid == std::string::npos || mid == 0) {
      throw std::runtime_error("--external expects name:loglik:k, got '" + spec + "'");
    }
    btgn::ExternalModelRow row;
    row.name = spec.substr(0, mid);
    row.log_likelihood = std::stod(spec.substr(mid + 1, last - mid - 1));
    row.n_free_params = std::stoi(spec.substr(last + 1));
    external.push_back(row);
  }

  const Eigen::ArrayXd data = args.data.load();
  const btgn::ComparisonTable table =
      btgn::compare_models(models, data, args.reference, args.fit.options, external);

  json config{{"subcommand", "compare"},
              {"models", args.models},
              {"reference", args.reference},
              {"external", args.external},
              {"data", args.data.to_json()},
              {"fit", args.fit.to_json()},
              {"format", args.format},
              {"output", args.output}};

  json rows = json::array();
  std::ostringstream body;
  body << "model,h0,log_likelihood,k,bic,two_ln_bf,evidence,converged,external\n";
  for (const auto& row : table.rows) {
    const std::string evidence =
        row.is_reference ? ""
                         : btgn::to_string(row.category) + (row.favors_alternative ? " (against H0)" : "");
    body << row.model_name << "," << (row.is_reference ? "H0" : "") << ","
         << fmt(row.log_likelihood) << "," << row.n_free_params << "," << fmt(row.bic_value) << ","
         << fmt(row.two_ln_bf) << "," << evidence << ","
         << (row.converged ? "true" : "false") << "," << (row.external ? "true" : "false") << "\n";
    rows.push_back(json{{"model", row.model_name},
                        {"h0", row.is_reference},
                        {"log_likelihood", row.log_likelihood},
                        {"k", row.n_free_params},
                        {"bic", row.bic_value},
                        {"two_ln_bf", row.two_ln_bf},
                        {"evidence", evidence},
                        {"converged", row.converged},
                        {"external", row.external}});
  }

  if (args.format == "json") {
    const json out{{"config", config},
                   {"table", json{{"reference", table.reference_model},
                                  {"n_obs", table.n_obs},
                                  {"rows", rows}}}};
    write_output(args.output, out.dump(2) + "\n");
  } else {
    write_output(args.output, csv_with_config(config, body.str()));
  }

  for (const auto& row : table.rows) {
    if (!row.converged) {
      std::cerr << "warning: fit of '" << row.model_name << "' did not converge\n";
      return kExitNotConverged;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// sample

struct SampleArgs {
  std::string model = "btgn";
  ParamFlags params;
  std::int64_t n = 0;
  std::uint64_t seed = btgn::kDefaultSeed;
  std::string format = "csv";
  std::string output;
};

int run_sample(const SampleArgs& args) {
  if (args.n < 0) throw std::runtime_error("-n must be non-negative");
  const btgn::ModelContract model = btgn::model_by_name(args.model);
  const Eigen::VectorXd theta = args.params.vector_for(model);

  btgn::Rng rng(args.seed);
  const Eigen::ArrayXd draws = model.sample(args.n, theta, rng);

  json config{{"subcommand", "sample"}, {"model", args.model},
              {"params", args.params.to_json(model)}, {"n", args.n},
              {"seed", args.seed},      {"format", args.format},
              {"output", args.output}};

  if (args.format == "json") {
    json values = json::array();
    for (double v : draws) values.push_back(v);
    write_output(args.output, json{{"config", config}, {"values", values}}.dump(2) + "\n");
  } else {
    std::ostringstream body;
    body << "value\n";
    for (double v : draws) body << fmt(v, 17) << "\n";
    write_output(args.output, csv_with_config(config, body.str()));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// plotdata

struct PlotDataArgs {
  std::string model = "tptan";
  ParamFlags params;
  DataFlags data;
  FitFlags fit;
  std::optional<double> from, to;
  int points = 201;
  std::optional<double> bandwidth;
  std::string format = "csv";
  std::string output;
};

int run_plotdata(const PlotDataArgs& args) {
  if (args.points < 1) throw std::runtime_error("--points must be at least 1");
  const btgn::ModelContract model = btgn::model_by_name(args.model);
  const Eigen::ArrayXd data = args.data.load();

  json config{{"subcommand", "plotdata"}, {"model", args.model},
              {"data", args.data.to_json()}, {"points", args.points},
              {"format", args.format},    {"output", args.output}};

  Eigen::VectorXd theta;
  if (args.params.any_given()) {
    theta = args.params.vector_for(model);
    config["params"] = args.params.to_json(model);
    config["fitted"] = false;
  } else {
    const btgn::FitReport report = btgn::mle_fit(model, data, args.fit.options);
    if (!report.converged) {
      std::cerr << "fit did not converge; refusing to emit plot data\n";
      return kExitNotConverged;
    }
    theta = report.estimate_vector();
    json estimates = json::object();
    for (const auto& [name, value] : report.estimates) estimates[name] = value;
    config["params"] = estimates;
    config["fitted"] = true;
    config["fit"] = args.fit.to_json();
  }

  const double h = args.bandwidth ? *args.bandwidth : btgn::silverman_bandwidth(data);
  config["bandwidth"] = h;
  const double lo = args.from ? *args.from : data.minCoeff() - 3.0 * h;
  const double hi = args.to ? *args.to : data.maxCoeff() + 3.0 * h;
  config["from"] = lo;
  config["to"] = hi;
  Eigen::ArrayXd grid = args.points == 1 ? Eigen::ArrayXd::Constant(1, lo)
                                         : Eigen::ArrayXd::LinSpaced(args.points, lo, hi);

  const std::vector<btgn::KdePoint> density = btgn::kde(data, grid, h);

  std::ostringstream body;
  json rows = json::array();
  body << "x,kde,fitted_pdf,log_kde,log_fitted\n";
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    const double k = density[i].density;
    const double lp = model.log_pdf(grid[i], theta);
    const double p = std::exp(lp);
    body << fmt(grid[i]) << "," << fmt(k) << "," << fmt(p) << ","
         << (k > 0.0 ? fmt(std::log(k)) : "") << "," << (p > 0.0 ? fmt(lp) : "") << "\n";
    rows.push_back(json{{"x", grid[i]},
                        {"kde", k},
                        {"fitted_pdf", p},
                        {"log_kde", k > 0.0 ? json(std::log(k)) : json(nullptr)},
                        {"log_fitted", p > 0.0 ? json(lp) : json(nullptr)}});
  }

  if (args.format == "json") {
    write_output(args.output, json{{"config", config}, {"grid", rows}}.dump(2) + "\n");
  } else {
    write_output(args.output, csv_with_config(config, body.str()));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// fetch

struct FetchArgs {
  btgn::FetchSpec spec;
  std::string transform = "none";
  std::string format = "csv";
  std::string output;
};

int run_fetch(const FetchArgs& args) {
  btgn::Series series = btgn::fetch_coinmetrics(args.spec);
  if (args.transform == "logreturns") {
    series = btgn::log_returns(series);
  } else if (args.transform != "none") {
    throw std::runtime_error("unknown --transform '" + args.transform + "' (none|logreturns)");
  }

  json config{{"subcommand", "fetch"},
              {"asset", args.spec.asset},
              {"metric", args.spec.metric},
              {"start", args.spec.start},
              {"end", args.spec.end},
              {"endpoint", args.spec.endpoint},
              {"cache_dir", args.spec.cache_dir},
              {"cache_file", btgn::fetch_cache_path(args.spec)},
              {"series_path", args.spec.schema.series_path},
              {"time_field", args.spec.schema.time_field},
              {"value_field", args.spec.schema.value_field},
              {"transform", args.transform},
              {"format", args.format},
              {"output", args.output}};

  const bool with_time = !series.timestamps.empty();
  if (args.format == "json") {
    json rows = json::array();
    for (Eigen::Index i = 0; i < series.values.size(); ++i) {
      json row{{"value", series.values[i]}};
      if (with_time) row["timestamp"] = series.timestamps[i];
      rows.push_back(row);
    }
    write_output(args.output,
                 json{{"config", config}, {"label", series.label}, {"series", rows}}.dump(2) + "\n");
  } else {
    std::ostringstream body;
    body << (with_time ? "timestamp,value\n" : "value\n");
    for (Eigen::Index i = 0; i < series.values.size(); ++i) {
      if (with_time) body << series.timestamps[i] << ",";
      body << fmt(series.values[i], 17) << "\n";
    }
    write_output(args.output, csv_with_config(config, body.str()));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"body-tail generalized normal distribution toolkit"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a density/CDF grid");
  eval_cmd->add_option("--model", eval_args.model, "model name (default btgn)");
  eval_args.params.attach(eval_cmd);
  eval_cmd->add_option("--from", eval_args.from, "grid start (default -4)");
  eval_cmd->add_option("--to", eval_args.to, "grid end (default 4)");
  eval_cmd->add_option("--points", eval_args.points, "grid size (default 101)");
  eval_cmd->add_flag("--kernel-derivative", eval_args.kernel_derivative,
                     "emit the derivative kernel instead of pdf/cdf");
  eval_cmd->add_option("--format", eval_args.format, "csv|json (default csv)");
  eval_cmd->add_option("-o,--output", eval_args.output, "output file (default stdout)");

  FitArgs fit_args;
  auto* fit_cmd = app.add_subcommand("fit", "maximum-likelihood fit of one model");
  fit_cmd->add_option("--model", fit_args.model, "model name")->required();
  fit_args.data.attach(fit_cmd);
  fit_args.fit.attach(fit_cmd);
  fit_cmd->add_flag("--no-standard-errors", fit_args.no_standard_errors,
                    "skip the numeric-Hessian standard errors");
  fit_cmd->add_option("--format", fit_args.format, "json (default)");
  fit_cmd->add_option("-o,--output", fit_args.output, "output file (default stdout)");

  CompareArgs compare_args;
  auto* compare_cmd = app.add_subcommand("compare", "fit several models and rank by BIC");
  compare_cmd->add_option("--models", compare_args.models, "comma-separated model names")
      ->required()
      ->delimiter(',');
  compare_args.data.attach(compare_cmd);
  compare_args.fit.attach(compare_cmd);
  compare_cmd->add_option("--reference", compare_args.reference,
                          "H0 model name, or 'best' for the lowest BIC (default)");
  compare_cmd->add_option("--external", compare_args.external,
                          "externally fitted row as name:loglik:k (repeatable)");
  compare_cmd->add_option("--format", compare_args.format, "csv|json (default csv)");
  compare_cmd->add_option("-o,--output", compare_args.output, "output file (default stdout)");

  SampleArgs sample_args;
  auto* sample_cmd = app.add_subcommand("sample", "draw random variates from a model");
  sample_cmd->add_option("--model", sample_args.model, "model name (default btgn)");
  sample_args.params.attach(sample_cmd);
  sample_cmd->add_option("-n,--count", sample_args.n, "number of draws")->required();
  sample_cmd->add_option("--seed", sample_args.seed, "random seed (default 42)");
  sample_cmd->add_option("--format", sample_args.format, "csv|json (default csv)");
  sample_cmd->add_option("-o,--output", sample_args.output, "output file (default stdout)");

  PlotDataArgs plot_args;
  auto* plot_cmd = app.add_subcommand("plotdata", "aligned KDE and fitted-density grid");
  plot_cmd->add_option("--model", plot_args.model, "model name (default tptan)");
  plot_args.params.attach(plot_cmd);
  plot_args.data.attach(plot_cmd);
  plot_args.fit.attach(plot_cmd);
  double plot_from = 0.0, plot_to = 0.0, plot_bw = 0.0;
  plot_cmd->add_option("--from", plot_from, "grid start (default: data min - 3 bandwidths)")
      ->each([&](const std::string&) { plot_args.from = plot_from; });
  plot_cmd->add_option("--to", plot_to, "grid end (default: data max + 3 bandwidths)")
      ->each([&](const std::string&) { plot_args.to = plot_to; });
  plot_cmd->add_option("--points", plot_args.points, "grid size (default 201)");
  plot_cmd->add_option("--bandwidth", plot_bw, "KDE bandwidth (default: Silverman)")
      ->each([&](const std::string&) { plot_args.bandwidth = plot_bw; });
  plot_cmd->add_option("--format", plot_args.format, "csv|json (default csv)");
  plot_cmd->add_option("-o,--output", plot_args.output, "output file (default stdout)");

  FetchArgs fetch_args;
  auto* fetch_cmd = app.add_subcommand("fetch", "download (and cache) a metrics series");
  fetch_cmd->add_option("--asset", fetch_args.spec.asset, "asset id, e.g. btc")->required();
  fetch_cmd->add_option("--metric", fetch_args.spec.metric, "metric name, e.g. PriceUSD")
      ->required();
  fetch_cmd->add_option("--start", fetch_args.spec.start, "start date (inclusive)")->required();
  fetch_cmd->add_option("--end", fetch_args.spec.end, "end date (inclusive)")->required();
  fetch_cmd->add_option("--endpoint", fetch_args.spec.endpoint,
                        "API base URL (default community coinmetrics v2 host)");
  fetch_cmd->add_option("--cache-dir", fetch_args.spec.cache_dir,
                        "directory for raw response caching (default fetch-cache)");
  fetch_cmd->add_option("--series-path", fetch_args.spec.schema.series_path,
                        "JSON dot path to the point array");
  fetch_cmd->add_option("--time-field", fetch_args.spec.schema.time_field,
                        "JSON dot path of a point's timestamp");
  fetch_cmd->add_option("--value-field", fetch_args.spec.schema.value_field,
                        "JSON dot path of a point's value");
  fetch_cmd->add_option("--transform", fetch_args.transform, "none|logreturns (default none)");
  fetch_cmd->add_option("--format", fetch_args.format, "csv|json (default csv)");
  fetch_cmd->add_option("-o,--output", fetch_args.output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (eval_cmd->parsed()) return run_eval(eval_args);
    if (fit_cmd->parsed()) return run_fit(fit_args);
    if (compare_cmd->parsed()) return run_compare(compare_args);
    if (sample_cmd->parsed()) return run_sample(sample_args);
    if (plot_cmd->parsed()) return run_plotdata(plot_args);
    if (fetch_cmd->parsed()) return run_fetch(fetch_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}
