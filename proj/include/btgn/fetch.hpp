#pragma once

#include <stdexcept>
#include <string>

#include "btgn/series.hpp"

namespace btgn {

/// JSON layout of the metrics response. Dot paths, with numeric components
/// indexing into arrays ("values.0" picks the first entry of "values").
struct ResponseSchema {
  std::string series_path = "metricData.series";  // path to the array of points
  std::string time_field = "time";                // per-point timestamp field
  std::string value_field = "values.0";           // per-point value field
};

struct FetchSpec {
  std::string asset;
  std::string metric;
  std::string start;  // inclusive date, e.g. 2013-07-07
  std::string end;    // inclusive date
  std::string endpoint = "https://community-api.coinmetrics.io";
  std::string cache_dir = "fetch-cache";
  ResponseSchema schema;
};

class FetchError : public std::runtime_error {
 public:
  enum class Kind { Network, HttpStatus, Parse, Empty };
  FetchError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Where the raw response body for this request is cached.
std::string fetch_cache_path(const FetchSpec& spec);

/// Fetches one asset/metric series over HTTP GET, parses it per the schema,
/// and caches the raw body (atomically) beside the output so reruns are
/// offline-reproducible: a warm cache is replayed without any network I/O.
/// Network trouble is retried once; every failure mode raises a distinct
/// FetchError, never partial data.
Series fetch_coinmetrics(const FetchSpec& spec);

namespace detail {

/// Parses a raw response body according to the schema. Exposed so fixtures
/// can be replayed in tests.
Series parse_coinmetrics_json(const std::string& body, const ResponseSchema& schema,
                              const std::string& label);

}  // namespace detail

}  // namespace btgn
