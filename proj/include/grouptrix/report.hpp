#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace grouptrix {

/// Ordered key-value facts. Serialisations are byte-stable for equal contents.
class ReportDocument {
 public:
  void add(std::string key, std::string value) { facts_.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
  void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }
  void add(std::string key, std::uint64_t value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, int value) { add(std::move(key), std::to_string(value)); }

  const std::vector<std::pair<std::string, std::string>>& facts() const { return facts_; }
  /// Value of the first fact with this key, or empty.
  std::string get(const std::string& key) const;

  /// One "key: value" line per fact.
  std::string to_text() const;
  /// JSON object with keys in insertion order; repeated keys become arrays.
  std::string to_json() const;

 private:
  std::vector<std::pair<std::string, std::string>> facts_;
};

}  // namespace grouptrix
