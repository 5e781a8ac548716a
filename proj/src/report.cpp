#include "grouptrix/report.hpp"

#include <json.hpp>

namespace grouptrix {

std::string ReportDocument::get(const std::string& key) const {
  for (auto& [k, v] : facts_)
    if (k == key) return v;
  return {};
}

std::string ReportDocument::to_text() const {
  std::string out;
  for (auto& [k, v] : facts_) out += k + ": " + v + "\n";
  return out;
}

std::string ReportDocument::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (auto& [k, v] : facts_) {
    if (!j.contains(k)) {
      j[k] = v;
    } else {
      if (!j[k].is_array()) j[k] = nlohmann::ordered_json::array({j[k]});
      j[k].push_back(v);
    }
  }
  return j.dump(2) + "\n";
}

}  // namespace grouptrix
