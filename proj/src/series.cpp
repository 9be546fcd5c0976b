#include "btgn/series.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace btgn {

void validate_series(const Series& series) {
  if (series.values.size() == 0) throw std::invalid_argument("series has no values");
  if (!series.values.isFinite().all()) throw std::invalid_argument("series contains non-finite values");
  if (!series.timestamps.empty()) {
    if (static_cast<Eigen::Index>(series.timestamps.size()) != series.values.size()) {
      throw std::invalid_argument("series timestamps and values differ in length");
    }
    for (std::size_t i = 1; i < series.timestamps.size(); ++i) {
      if (series.timestamps[i] <= series.timestamps[i - 1]) {
        throw std::invalid_argument("series timestamps must be strictly increasing");
      }
    }
  }
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text, char delimiter) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool any_content = false;

  auto end_field = [&] {
    record.push_back(field);
    field.clear();
  };
  auto end_record = [&] {
    end_field();
    records.push_back(record);
    record.clear();
    any_content = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      in_quotes = true;
      any_content = true;
    } else if (c == delimiter) {
      end_field();
      any_content = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any_content || !field.empty() || !record.empty()) end_record();
    } else {
      field += c;
      any_content = true;
    }
  }
  if (any_content || !field.empty() || !record.empty()) end_record();
  return records;
}

namespace {

bool parse_double(const std::string& text, double* out) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  try {
    *out = std::stod(text, &pos);
  } catch (const std::exception&) {
    return false;
  }
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  return pos == text.size() && std::isfinite(*out);
}

}  // namespace

CsvColumn read_csv_column(const std::string& path, const ColumnRef& column,
                          const CsvOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open CSV file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  // keep original 1-based line numbers for error reporting; comment lines skipped
  std::vector<std::pair<std::size_t, std::string>> lines;
  {
    std::size_t line_no = 0, start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string::npos) end = text.size();
      ++line_no;
      std::string line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty() && line[0] != '#') lines.emplace_back(line_no, line);
      start = end + 1;
      if (end == text.size()) break;
    }
  }
  if (lines.empty()) throw std::runtime_error("CSV file '" + path + "' is empty");

  std::size_t first_data = 0;
  int column_index = -1;
  std::string label;
  if (std::holds_alternative<std::string>(column)) {
    const std::string& name = std::get<std::string>(column);
    if (!options.has_header) {
      throw std::invalid_argument("selecting column '" + name + "' by name requires a header row");
    }
    const auto header = parse_csv(lines[0].second, options.delimiter);
    for (std::size_t j = 0; header.size() == 1 && j < header[0].size(); ++j) {
      if (header[0][j] == name) column_index = static_cast<int>(j);
    }
    if (column_index < 0) {
      throw std::invalid_argument("CSV file '" + path + "' has no column named '" + name + "'");
    }
    label = name;
    first_data = 1;
  } else {
    column_index = std::get<int>(column);
    if (column_index < 0) throw std::invalid_argument("column index must be non-negative");
    if (options.has_header) {
      const auto header = parse_csv(lines[0].second, options.delimiter);
      if (header.size() == 1 && column_index < static_cast<int>(header[0].size())) {
        label = header[0][column_index];
      }
      first_data = 1;
    }
    if (label.empty()) label = "column " + std::to_string(column_index);
  }

  std::vector<double> values;
  CsvColumn out;
  for (std::size_t i = first_data; i < lines.size(); ++i) {
    const auto fields = parse_csv(lines[i].second, options.delimiter);
    if (fields.empty()) continue;
    const auto& row = fields[0];
    double v = 0.0;
    const bool in_range = column_index < static_cast<int>(row.size());
    if (in_range && parse_double(row[column_index], &v)) {
      values.push_back(v);
    } else if (options.skip_bad_rows) {
      out.skipped_lines.push_back(lines[i].first);
    } else {
      const std::string cell = in_range ? row[column_index] : "<missing>";
      throw std::runtime_error("CSV file '" + path + "' line " + std::to_string(lines[i].first) +
                               ": cannot parse '" + cell + "' as a number");
    }
  }
  if (values.empty()) {
    throw std::runtime_error("CSV file '" + path + "' yielded no numeric values for " + label);
  }
  out.series.values = Eigen::Map<const Eigen::ArrayXd>(values.data(), values.size());
  out.series.label = label;
  return out;
}

Series log_returns(const Series& prices) {
  validate_series(prices);
  const Eigen::Index n = prices.values.size();
  if (n < 2) throw std::domain_error("log returns need at least two prices");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(prices.values[i] > 0.0)) {
      throw std::domain_error("log returns need strictly positive prices; offending index " +
                              std::to_string(i));
    }
  }
  Series out;
  out.values = (prices.values.tail(n - 1) / prices.values.head(n - 1)).log();
  if (!prices.timestamps.empty()) {
    out.timestamps.assign(prices.timestamps.begin() + 1, prices.timestamps.end());
  }
  out.label = prices.label.empty() ? "log_returns" : prices.label + " log returns";
  return out;
}

namespace {

double quantile_sorted(const std::vector<double>& sorted, double p) {
  const double idx = p * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(idx);
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double w = idx - static_cast<double>(lo);
  return (1.0 - w) * sorted[lo] + w * sorted[hi];
}

}  // namespace

double silverman_bandwidth(const Eigen::ArrayXd& values) {
  const Eigen::Index n = values.size();
  if (n < 2) throw std::domain_error("bandwidth selection needs at least two points");
  const double mean = values.mean();
  const double sd = std::sqrt((values - mean).square().sum() / static_cast<double>(n - 1));
  std::vector<double> sorted(values.data(), values.data() + n);
  std::sort(sorted.begin(), sorted.end());
  const double iqr = quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);
  const double spread = iqr > 0.0 ? std::min(sd, iqr / 1.34) : sd;
  const double h = 0.9 * spread * std::pow(static_cast<double>(n), -0.2);
  if (!(h > 0.0)) throw std::domain_error("degenerate data: zero spread, no usable bandwidth");
  return h;
}

std::vector<KdePoint> kde(const Eigen::ArrayXd& values, const Eigen::ArrayXd& grid,
                          std::optional<double> bandwidth) {
  if (values.size() < 2) throw std::domain_error("KDE needs at least two data points");
  if (!grid.isFinite().all()) throw std::invalid_argument("KDE grid must be finite");
  const double h = bandwidth ? *bandwidth : silverman_bandwidth(values);
  if (!(h > 0.0) || !std::isfinite(h)) throw std::domain_error("bandwidth must be positive");

  const double norm = 1.0 / (static_cast<double>(values.size()) * h * std::sqrt(2.0 * M_PI));
  std::vector<KdePoint> out(grid.size());
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    const double density = ((values - grid[i]) / h).square().unaryExpr([](double u) {
      return std::exp(-0.5 * u);
    }).sum() * norm;
    out[i] = KdePoint{grid[i], density};
  }
  return out;
}

}  // namespace btgn
