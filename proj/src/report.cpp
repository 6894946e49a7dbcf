#include "mockhyp/report.hpp"

#include <algorithm>
#include <sstream>

#include "mockhyp/error.hpp"

namespace mockhyp {

void AxiomReport::add(std::string name, bool pass, std::vector<std::int64_t> witness,
                      std::string detail) {
  checks_.push_back({std::move(name), pass, pass ? std::vector<std::int64_t>{} : std::move(witness),
                     std::move(detail)});
}

void AxiomReport::merge(const AxiomReport& other, std::string_view prefix) {
  for (const Check& c : other.checks_) {
    Check copy = c;
    copy.name = std::string(prefix) + "." + c.name;
    checks_.push_back(std::move(copy));
  }
  for (const auto& [key, value] : other.counts_) counts_[std::string(prefix) + "." + key] = value;
}

bool AxiomReport::all_pass() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

bool AxiomReport::has(std::string_view name) const {
  return std::any_of(checks_.begin(), checks_.end(),
                     [&](const Check& c) { return c.name == name; });
}

const Check& AxiomReport::get(std::string_view name) const {
  for (const Check& c : checks_) {
    if (c.name == name) return c;
  }
  throw Error(ErrorCode::Internal, "no check named " + std::string(name));
}

bool AxiomReport::passed(std::string_view name) const { return get(name).pass; }

std::vector<std::string> AxiomReport::failures() const {
  std::vector<std::string> out;
  for (const Check& c : sorted_checks()) {
    if (!c.pass) out.push_back(c.name);
  }
  return out;
}

std::vector<Check> AxiomReport::sorted_checks() const {
  std::vector<Check> out = checks_;
  std::stable_sort(out.begin(), out.end(),
                   [](const Check& a, const Check& b) { return a.name < b.name; });
  return out;
}

nlohmann::json to_json(const AxiomReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const Check& c : report.sorted_checks()) {
    nlohmann::json entry = {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
    if (!c.witness.empty()) entry["witness"] = c.witness;
    checks.push_back(std::move(entry));
  }
  nlohmann::json out = {
      {"checks", std::move(checks)},
      {"stats",
       {{"Q", report.stats.q},
        {"lines", report.stats.lines},
        {"line_sizes", report.stats.line_sizes},
        {"translations", report.stats.translations}}},
  };
  if (!report.counts().empty()) out["counts"] = report.counts();
  return out;
}

std::string to_text(const AxiomReport& report) {
  const auto checks = report.sorted_checks();
  std::size_t width = 0;
  for (const Check& c : checks) width = std::max(width, c.name.size());

  std::ostringstream os;
  for (const Check& c : checks) {
    os << (c.pass ? "PASS  " : "FAIL  ") << c.name << std::string(width - c.name.size() + 2, ' ');
    os << c.detail;
    if (!c.witness.empty()) {
      os << " [witness:";
      for (auto w : c.witness) os << ' ' << w;
      os << ']';
    }
    os << '\n';
  }
  os << "Q=" << report.stats.q << " lines=" << report.stats.lines << " line_sizes=";
  for (std::size_t i = 0; i < report.stats.line_sizes.size(); ++i) {
    os << (i ? "," : "") << report.stats.line_sizes[i];
  }
  os << " translations=" << report.stats.translations << '\n';
  for (const auto& [key, value] : report.counts()) os << key << '=' << value << '\n';
  return os.str();
}

}  // namespace mockhyp
