#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "btgn/fit.hpp"
#include "btgn/models.hpp"

namespace btgn {

/// Kass-Raftery evidence strength on the 2 ln(Bayes factor) scale:
/// [0,2) negligible, [2,6) positive, [6,10) strong, [10,inf) very strong.
enum class EvidenceCategory { Negligible, Positive, Strong, VeryStrong };

std::string to_string(EvidenceCategory category);

/// Classifies the magnitude |two_ln_bf|.
EvidenceCategory evidence_category(double two_ln_bf);

struct Evidence {
  EvidenceCategory category;
  bool favors_alternative;  // true when two_ln_bf < 0
};

Evidence classify_evidence(double two_ln_bf);

/// Schwarz criterion k ln(n) - 2 loglik. n may be any real count >= 1.
double bic(double log_likelihood, int k, double n);

/// BIC approximation of 2 ln BF(reference over alternative).
double two_ln_bf(double bic_ref, double bic_alt);

/// Comparison row supplied externally (a competitor fitted elsewhere);
/// only (loglik, k) are needed, BIC is computed against the shared n.
struct ExternalModelRow {
  std::string name;
  double log_likelihood;
  int n_free_params;
};

struct ComparisonRow {
  std::string model_name;
  double log_likelihood = 0.0;
  int n_free_params = 0;
  double bic_value = 0.0;
  double two_ln_bf = 0.0;
  EvidenceCategory category = EvidenceCategory::Negligible;
  bool favors_alternative = false;
  bool is_reference = false;
  bool converged = false;
  bool external = false;
};

struct ComparisonTable {
  std::string reference_model;
  std::int64_t n_obs = 0;
  std::vector<ComparisonRow> rows;  // sorted by (two_ln_bf, name)

  const ComparisonRow& row(const std::string& model_name) const;
};

/// Fits every model on the data, adds any external rows, and builds the
/// Bayes-factor table. reference is a model name or "best" (lowest BIC wins
/// the H0 slot). Non-converged fits stay in the table, flagged, but are never
/// selected as reference. Output is invariant to the ordering of `models`.
ComparisonTable compare_models(const std::vector<ModelContract>& models,
                               const Eigen::ArrayXd& data, const std::string& reference = "best",
                               const FitOptions& options = {},
                               const std::vector<ExternalModelRow>& external = {},
                               std::vector<FitReport>* fit_reports = nullptr);

}  // namespace btgn
