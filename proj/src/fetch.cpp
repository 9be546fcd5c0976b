#include "btgn/fetch.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <httplib.h>
#include <json.hpp>

namespace btgn {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t hash = 1469598103934665603ull;
  for (const unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string sanitize(const std::string& text) {
  std::string out;
  for (const char c : text) {
    out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.') ? c : '_';
  }
  return out;
}

// Follows a dot path; numeric components index arrays.
const json* walk_path(const json& root, const std::string& path) {
  const json* node = &root;
  std::istringstream parts(path);
  std::string part;
  while (std::getline(parts, part, '.')) {
    if (part.empty()) continue;
    if (node->is_array()) {
      std::size_t idx = 0;
      try {
        idx = std::stoul(part);
      } catch (const std::exception&) {
        return nullptr;
      }
      if (idx >= node->size()) return nullptr;
      node = &(*node)[idx];
    } else if (node->is_object() && node->contains(part)) {
      node = &(*node)[part];
    } else {
      return nullptr;
    }
  }
  return node;
}

std::pair<std::string, std::string> split_endpoint(const std::string& endpoint) {
  // scheme://host[:port] [/base-path]
  const auto scheme_end = endpoint.find("://");
  const std::size_t host_start = scheme_end == std::string::npos ? 0 : scheme_end + 3;
  const auto path_start = endpoint.find('/', host_start);
  if (path_start == std::string::npos) return {endpoint, ""};
  return {endpoint.substr(0, path_start), endpoint.substr(path_start)};
}

void write_file_atomic(const std::string& path, const std::string& body) {
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << body;
    if (!out) throw std::runtime_error("cannot write cache file '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

}  // namespace

namespace detail {

Series parse_coinmetrics_json(const std::string& body, const ResponseSchema& schema,
                              const std::string& label) {
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::parse_error& e) {
    throw FetchError(FetchError::Kind::Parse, std::string("malformed JSON response: ") + e.what());
  }
  const json* series = walk_path(doc, schema.series_path);
  if (!series || !series->is_array()) {
    throw FetchError(FetchError::Kind::Parse,
                     "response has no array at '" + schema.series_path + "'");
  }
  if (series->empty()) {
    throw FetchError(FetchError::Kind::Empty, "response series is empty");
  }

  Series out;
  out.label = label;
  out.values.resize(static_cast<Eigen::Index>(series->size()));
  bool any_time = false;
  for (std::size_t i = 0; i < series->size(); ++i) {
    const json& point = (*series)[i];
    const json* value = walk_path(point, schema.value_field);
    if (!value || value->is_null()) {
      throw FetchError(FetchError::Kind::Parse,
                       "null or missing value at series offset " + std::to_string(i));
    }
    double v = 0.0;
    if (value->is_number()) {
      v = value->get<double>();
    } else if (value->is_string()) {
      try {
        v = std::stod(value->get<std::string>());
      } catch (const std::exception&) {
        throw FetchError(FetchError::Kind::Parse,
                         "non-numeric value at series offset " + std::to_string(i));
      }
    } else {
      throw FetchError(FetchError::Kind::Parse,
                       "non-numeric value at series offset " + std::to_string(i));
    }
    out.values[static_cast<Eigen::Index>(i)] = v;
    const json* time = walk_path(point, schema.time_field);
    if (time && time->is_string()) {
      out.timestamps.push_back(time->get<std::string>());
      any_time = true;
    }
  }
  if (any_time && out.timestamps.size() != static_cast<std::size_t>(out.values.size())) {
    throw FetchError(FetchError::Kind::Parse, "timestamps missing for part of the series");
  }
  try {
    validate_series(out);
  } catch (const std::invalid_argument& e) {
    throw FetchError(FetchError::Kind::Parse, std::string("invalid series: ") + e.what());
  }
  return out;
}

}  // namespace detail

std::string fetch_cache_path(const FetchSpec& spec) {
  const std::string key = spec.endpoint + "|" + spec.asset + "|" + spec.metric + "|" + spec.start +
                          "|" + spec.end;
  std::ostringstream name;
  name << "cm_" << sanitize(spec.asset) << "_" << sanitize(spec.metric) << "_" << std::hex
       << fnv1a(key) << ".json";
  return (fs::path(spec.cache_dir) / name.str()).string();
}

Series fetch_coinmetrics(const FetchSpec& spec) {
  const std::string label = spec.asset + "." + spec.metric;
  const std::string cache_path = fetch_cache_path(spec);
  if (fs::exists(cache_path)) {
    std::ifstream in(cache_path, std::ios::binary);
    std::stringstream body;
    body << in.rdbuf();
    return detail::parse_coinmetrics_json(body.str(), spec.schema, label);
  }

  const auto [host, base_path] = split_endpoint(spec.endpoint);
  const std::string path = base_path + "/v2/assets/" + spec.asset +
                           "/metricdata?metrics=" + spec.metric + "&start=" + spec.start +
                           "&end=" + spec.end;

  httplib::Client client(host);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);

  httplib::Result result = client.Get(path);
  if (!result) result = client.Get(path);  // single retry on transport failure
  if (!result) {
    throw FetchError(FetchError::Kind::Network,
                     "network failure fetching " + host + path + ": " +
                         httplib::to_string(result.error()));
  }
  if (result->status < 200 || result->status >= 300) {
    throw FetchError(FetchError::Kind::HttpStatus,
                     "HTTP status " + std::to_string(result->status) + " fetching " + host + path);
  }

  Series series = detail::parse_coinmetrics_json(result->body, spec.schema, label);
  write_file_atomic(cache_path, result->body);
  return series;
}

}  // namespace btgn
