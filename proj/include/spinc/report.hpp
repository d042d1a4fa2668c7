#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace spinc {

/// Outcome of one verification check.
struct CheckReport {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  std::optional<double> residual;
  std::optional<double> tol;
  bool pass = false;
  /// Only filled when timing is requested, so that reports stay reproducible.
  std::optional<std::int64_t> runtimeMs;
  std::optional<std::string> error;
};

nlohmann::json to_json(const CheckReport& r);

struct RunConfig {
  std::uint64_t seed = 0;
  std::map<std::string, double> tolOverrides;
  std::optional<std::string> outputPath;
  bool jsonPretty = false;
  bool jsonLines = false;
  bool timing = false;
  std::optional<int> n;
  std::optional<int> modes;
  std::optional<int> cutoff;
  /// Sample count for u-embed and loop steps for the monodromy checks.
  std::optional<int> count;
  std::optional<int> steps;

  double tol(const std::string& key, double fallback) const {
    auto it = tolOverrides.find(key);
    return it == tolOverrides.end() ? fallback : it->second;
  }
};

/// JSON array (or one object per line) of the reports in the given order.
std::string render_reports(const std::vector<CheckReport>& reports, bool jsonLines, bool pretty);

bool all_pass(const std::vector<CheckReport>& reports);

}  // namespace spinc
