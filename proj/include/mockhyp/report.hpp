#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace mockhyp {

struct Check {
  std::string name;
  bool pass = true;
  std::vector<std::int64_t> witness;  // offending elements, empty on success
  std::string detail;
};

struct ReportStats {
  std::size_t q = 0;
  std::size_t lines = 0;
  std::vector<std::size_t> line_sizes;  // distinct sizes, ascending
  std::size_t translations = 0;
};

/// Named pass/fail results plus summary counts. Failures are data here;
/// exceptions are reserved for malformed input.
class AxiomReport {
 public:
  void add(std::string name, bool pass, std::vector<std::int64_t> witness = {},
           std::string detail = {});
  /// Appends all checks and counts of other, prefixing each name with "prefix.".
  void merge(const AxiomReport& other, std::string_view prefix);
  void set_count(std::string key, std::int64_t value) { counts_[std::move(key)] = value; }

  bool all_pass() const;
  bool has(std::string_view name) const;
  /// Pass flag of the named check; throws E_INTERNAL if it does not exist.
  bool passed(std::string_view name) const;
  const Check& get(std::string_view name) const;
  std::vector<std::string> failures() const;

  /// Checks ordered by name.
  std::vector<Check> sorted_checks() const;
  const std::vector<Check>& checks() const noexcept { return checks_; }
  const std::map<std::string, std::int64_t>& counts() const noexcept { return counts_; }

  ReportStats stats;

 private:
  std::vector<Check> checks_;
  std::map<std::string, std::int64_t> counts_;
};

nlohmann::json to_json(const AxiomReport& report);
/// Aligned plain-text rendering of to_json.
std::string to_text(const AxiomReport& report);

}  // namespace mockhyp
