#include "btgn/model_selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace btgn {

std::string to_string(EvidenceCategory category) {
  switch (category) {
    case EvidenceCategory::Negligible: return "Negligible";
    case EvidenceCategory::Positive: return "Positive";
    case EvidenceCategory::Strong: return "Strong";
    case EvidenceCategory::VeryStrong: return "Very strong";
  }
  throw std::logic_error("unreachable evidence category");
}

EvidenceCategory evidence_category(double two_ln_bf) {
  if (!std::isfinite(two_ln_bf)) throw std::domain_error("evidence value must be finite");
  const double magnitude = std::abs(two_ln_bf);
  if (magnitude < 2.0) return EvidenceCategory::Negligible;
  if (magnitude < 6.0) return EvidenceCategory::Positive;
  if (magnitude < 10.0) return EvidenceCategory::Strong;
  return EvidenceCategory::VeryStrong;
}

Evidence classify_evidence(double two_ln_bf) {
  return Evidence{evidence_category(two_ln_bf), two_ln_bf < 0.0};
}

double bic(double log_likelihood, int k, double n) {
  if (!std::isfinite(log_likelihood)) throw std::domain_error("log-likelihood must be finite");
  if (k < 1) throw std::domain_error("parameter count must be at least 1");
  if (!(n >= 1.0) || !std::isfinite(n)) throw std::domain_error("sample size must be >= 1");
  return static_cast<double>(k) * std::log(n) - 2.0 * log_likelihood;
}

double two_ln_bf(double bic_ref, double bic_alt) {
  if (!std::isfinite(bic_ref) || !std::isfinite(bic_alt)) {
    throw std::domain_error("BIC values must be finite");
  }
  return bic_alt - bic_ref;
}

const ComparisonRow& ComparisonTable::row(const std::string& model_name) const {
  for (const auto& r : rows) {
    if (r.model_name == model_name) return r;
  }
  throw std::invalid_argument("no comparison row for model '" + model_name + "'");
}

ComparisonTable compare_models(const std::vector<ModelContract>& models,
                               const Eigen::ArrayXd& data, const std::string& reference,
                               const FitOptions& options,
                               const std::vector<ExternalModelRow>& external,
                               std::vector<FitReport>* fit_reports) {
  if (models.size() + external.size() < 2) {
    throw std::invalid_argument("model comparison needs at least two models");
  }

  ComparisonTable table;
  table.n_obs = data.size();
  const double n = static_cast<double>(data.size());

  for (const auto& model : models) {
    const FitReport fit = mle_fit(model, data, options);
    if (fit_reports) fit_reports->push_back(fit);
    ComparisonRow row;
    row.model_name = fit.model_name;
    row.log_likelihood = fit.log_likelihood;
    row.n_free_params = fit.n_free_params;
    row.converged = fit.converged;
    row.bic_value = std::isfinite(fit.log_likelihood)
                        ? bic(fit.log_likelihood, fit.n_free_params, n)
                        : std::numeric_limits<double>::infinity();
    table.rows.push_back(row);
  }
  for (const auto& ext : external) {
    ComparisonRow row;
    row.model_name = ext.name;
    row.log_likelihood = ext.log_likelihood;
    row.n_free_params = ext.n_free_params;
    row.converged = true;
    row.external = true;
    row.bic_value = bic(ext.log_likelihood, ext.n_free_params, n);
    table.rows.push_back(row);
  }

  const ComparisonRow* ref = nullptr;
  if (reference == "best") {
    for (const auto& row : table.rows) {
      if (!row.converged) continue;  // flagged rows never take the H0 slot
      if (!ref || row.bic_value < ref->bic_value ||
          (row.bic_value == ref->bic_value && row.model_name < ref->model_name)) {
        ref = &row;
      }
    }
    if (!ref) throw std::runtime_error("no model converged; cannot select a reference");
  } else {
    for (const auto& row : table.rows) {
      if (row.model_name == reference) ref = &row;
    }
    if (!ref) throw std::invalid_argument("reference model '" + reference + "' is not in the comparison");
  }

  table.reference_model = ref->model_name;
  const double bic_ref = ref->bic_value;
  for (auto& row : table.rows) {
    row.is_reference = row.model_name == table.reference_model;
    row.two_ln_bf = row.is_reference || !std::isfinite(row.bic_value)
                        ? (row.is_reference ? 0.0 : std::numeric_limits<double>::infinity())
                        : two_ln_bf(bic_ref, row.bic_value);
    if (std::isfinite(row.two_ln_bf)) {
      const Evidence e = classify_evidence(row.two_ln_bf);
      row.category = e.category;
      row.favors_alternative = e.favors_alternative;
    } else {
      row.category = EvidenceCategory::VeryStrong;
      row.favors_alternative = false;
    }
  }
  std::sort(table.rows.begin(), table.rows.end(), [](const ComparisonRow& a, const ComparisonRow& b) {
    if (a.two_ln_bf != b.two_ln_bf) return a.two_ln_bf < b.two_ln_bf;
    return a.model_name < b.model_name;
  });
  return table;
}

}  // namespace btgn
