#pragma once

// Verification reports: one record per check, serialized as JSON, aligned
// text or CSV. Records are sorted by id so output order never depends on the
// order in which checks ran.

#include <algorithm>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "awvec/convergence.hpp"

namespace awvec {

enum class Status { Pass, Fail, NotApplicable };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: return "not-applicable";
  }
  return "fail";
}

struct CheckRecord {
  std::string id;
  std::string paper_ref;  // the identity being checked, in words
  Status status = Status::Fail;
  std::optional<std::string> witness;
};

struct Report {
  std::string suite;
  std::map<std::string, std::string> params;
  std::vector<CheckRecord> checks;
  std::vector<LimitReport> tables;
  long long elapsed_ms = 0;

  void add(std::string id, std::string ref, bool ok, std::optional<std::string> witness = std::nullopt) {
    checks.push_back({std::move(id), std::move(ref), ok ? Status::Pass : Status::Fail,
                      ok ? std::nullopt : std::move(witness)});
  }
  void add_na(std::string id, std::string ref, std::string why) {
    checks.push_back({std::move(id), std::move(ref), Status::NotApplicable, std::move(why)});
  }

  int count(Status s) const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [s](const CheckRecord& c) { return c.status == s; }));
  }
  bool passed() const { return count(Status::Fail) == 0; }

  void sort() {
    std::stable_sort(checks.begin(), checks.end(), [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  }
};

inline std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << std::scientific << v;
  return os.str();
}

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckRecord& c : r.checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["paper_ref"] = c.paper_ref;
    e["status"] = status_name(c.status);
    if (c.witness) e["witness"] = *c.witness;
    j["checks"].push_back(std::move(e));
  }
  if (!r.tables.empty()) {
    j["tables"] = nlohmann::ordered_json::array();
    for (const LimitReport& t : r.tables) {
      nlohmann::ordered_json tj;
      tj["name"] = t.name;
      tj["param"] = t.param_label;
      tj["rows"] = nlohmann::ordered_json::array();
      for (const LimitSample& s : t.samples) {
        nlohmann::ordered_json row;
        row["step"] = s.step;
        row["param"] = s.param;
        row["error"] = s.error;
        row["order"] = std::isfinite(s.order) ? nlohmann::ordered_json(s.order) : nlohmann::ordered_json();
        tj["rows"].push_back(std::move(row));
      }
      j["tables"].push_back(std::move(tj));
    }
  }
  j["summary"] = {{"pass", r.count(Status::Pass)}, {"fail", r.count(Status::Fail)}, {"na", r.count(Status::NotApplicable)}};
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "suite: " << r.suite << "\n";
  for (const auto& [k, v] : r.params) os << "  " << k << " = " << v << "\n";
  std::size_t w = 2;
  for (const CheckRecord& c : r.checks) w = std::max(w, c.id.size());
  for (const CheckRecord& c : r.checks) {
    os << std::left << std::setw(15) << status_name(c.status) << std::setw(static_cast<int>(w) + 2) << c.id << c.paper_ref;
    if (c.witness) os << "  [" << *c.witness << "]";
    os << "\n";
  }
  for (const LimitReport& t : r.tables) {
    os << "\n" << t.name << "\n";
    os << std::left << std::setw(6) << "step" << std::setw(16) << t.param_label << std::setw(16) << "error"
       << "order\n";
    for (const LimitSample& s : t.samples)
      os << std::left << std::setw(6) << s.step << std::setw(16) << format_double(s.param) << std::setw(16)
         << format_double(s.error) << (std::isfinite(s.order) ? format_double(s.order) : "-") << "\n";
  }
  os << "summary: " << r.count(Status::Pass) << " pass, " << r.count(Status::Fail) << " fail, "
     << r.count(Status::NotApplicable) << " n/a";
  if (r.elapsed_ms > 0) os << ", " << r.elapsed_ms << " ms";
  os << "\n";
  return os.str();
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace detail

/// Limit tables when present, otherwise the check records.
inline std::string to_csv(const Report& r) {
  std::ostringstream os;
  if (!r.tables.empty()) {
    os << "table,step,param,error,order\n";
    for (const LimitReport& t : r.tables)
      for (const LimitSample& s : t.samples)
        os << detail::csv_field(t.name) << "," << s.step << "," << format_double(s.param) << ","
           << format_double(s.error) << "," << (std::isfinite(s.order) ? format_double(s.order) : "") << "\n";
    return os.str();
  }
  os << "id,status,paper_ref,witness\n";
  for (const CheckRecord& c : r.checks)
    os << detail::csv_field(c.id) << "," << status_name(c.status) << "," << detail::csv_field(c.paper_ref) << ","
       << detail::csv_field(c.witness.value_or("")) << "\n";
  return os.str();
}

}  // namespace awvec
