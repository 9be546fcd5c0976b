#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace btgn {

/// A labeled sequence of finite reals, optionally with strictly increasing
/// timestamps (ISO-8601 strings order correctly as text).
struct Series {
  std::vector<std::string> timestamps;  // empty, or one per value
  Eigen::ArrayXd values;
  std::string label;
};

/// Throws std::invalid_argument if the series violates its invariants
/// (non-empty finite values; timestamps strictly increasing and matching in
/// length when present).
void validate_series(const Series& series);

struct CsvOptions {
  bool has_header = true;
  char delimiter = ',';
  bool skip_bad_rows = false;  // without it, the first unparsable cell is an error
};

/// Column selector: a header name or a zero-based index.
using ColumnRef = std::variant<std::string, int>;

struct CsvColumn {
  Series series;
  std::vector<std::size_t> skipped_lines;  // 1-based line numbers of dropped rows
};

/// Reads one numeric column from an RFC-4180-style CSV file. Lines starting
/// with '#' are treated as comments. Unparsable rows fail with the line
/// number unless skip_bad_rows is set, in which case they are dropped and
/// reported in skipped_lines.
CsvColumn read_csv_column(const std::string& path, const ColumnRef& column,
                          const CsvOptions& options = {});

/// RFC-4180 record splitter (quoted fields, embedded delimiters/newlines,
/// doubled-quote escapes). Exposed for the CLI's own file handling.
std::vector<std::vector<std::string>> parse_csv(const std::string& text, char delimiter = ',');

/// r_t = ln(p_t / p_{t-1}); needs strictly positive prices, length >= 2.
/// Timestamps, when present, shift to the later point of each pair.
Series log_returns(const Series& prices);

/// Silverman's rule: 0.9 * min(sd, IQR/1.34) * n^(-1/5).
double silverman_bandwidth(const Eigen::ArrayXd& values);

struct KdePoint {
  double x;
  double density;
};

/// Gaussian-kernel density estimate on the given grid; bandwidth defaults to
/// Silverman's rule. Degenerate (zero-spread) data is a domain error.
std::vector<KdePoint> kde(const Eigen::ArrayXd& values, const Eigen::ArrayXd& grid,
                          std::optional<double> bandwidth = std::nullopt);

}  // namespace btgn
