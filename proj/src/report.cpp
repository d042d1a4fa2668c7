#include "spinc/report.hpp"

#include <algorithm>

namespace spinc {

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j;
  j["check"] = r.check;
  j["params"] = r.params;
  j["residual"] = r.residual ? nlohmann::json(*r.residual) : nlohmann::json(nullptr);
  j["tol"] = r.tol ? nlohmann::json(*r.tol) : nlohmann::json(nullptr);
  j["pass"] = r.pass;
  j["runtimeMs"] = r.runtimeMs ? nlohmann::json(*r.runtimeMs) : nlohmann::json(nullptr);
  if (r.error) j["error"] = *r.error;
  return j;
}

std::string render_reports(const std::vector<CheckReport>& reports, bool jsonLines, bool pretty) {
  if (jsonLines) {
    std::string out;
    for (const auto& r : reports) out += to_json(r).dump() + "\n";
    return out;
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr.dump(pretty ? 2 : -1) + "\n";
}

bool all_pass(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass; });
}

}  // namespace spinc
