#ifndef RAMELLIN_REPORT_IO_HPP
#define RAMELLIN_REPORT_IO_HPP

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramellin/identities.hpp"

// Report serialization.  JSON schema:
//   {suite, cases: [{id, params, lhs, rhs, abs_err, rel_err, status, notes}],
//    summary: {pass, fail, report_only, divergent}}
// CSV carries the same columns in the same order.  The timestamp lives in
// its own header field so deterministic comparison can drop it.

namespace ramellin {
namespace io {

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string params_string(const std::map<std::string, double>& params) {
  std::string s;
  for (const auto& [key, value] : params) {  // std::map: sorted, deterministic
    if (!s.empty()) s += ';';
    s += key + "=" + format_double(value);
  }
  return s;
}

inline std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline nlohmann::ordered_json report_to_json(const IdentityReport& rep) {
  nlohmann::ordered_json j;
  j["id"] = rep.id_string();
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : rep.kase.params) params[key] = value;
  j["params"] = params;
  j["lhs"] = rep.lhs;
  j["rhs"] = rep.rhs;
  j["abs_err"] = rep.abs_err;
  j["rel_err"] = rep.rel_err;
  j["status"] = to_string(rep.status);
  j["notes"] = rep.notes;
  return j;
}

inline std::string suite_to_json(const std::string& suite,
                                 const std::vector<IdentityReport>& reports,
                                 bool with_timestamp) {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  if (with_timestamp) j["timestamp"] = timestamp_utc();
  j["cases"] = nlohmann::ordered_json::array();
  for (const auto& rep : reports) j["cases"].push_back(report_to_json(rep));
  SuiteSummary s = summarize(reports);
  j["summary"] = {{"pass", s.pass},
                  {"fail", s.fail},
                  {"report_only", s.report_only},
                  {"divergent", s.divergent}};
  return j.dump(2) + "\n";
}

inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string suite_to_csv(const std::string& suite,
                                const std::vector<IdentityReport>& reports,
                                bool with_timestamp) {
  std::ostringstream out;
  out << "# suite=" << suite;
  if (with_timestamp) out << " timestamp=" << timestamp_utc();
  out << "\n";
  out << "id,params,lhs,rhs,abs_err,rel_err,status,notes\n";
  for (const auto& rep : reports) {
    out << rep.id_string() << ',' << csv_escape(params_string(rep.kase.params))
        << ',' << format_double(rep.lhs) << ',' << format_double(rep.rhs) << ','
        << format_double(rep.abs_err) << ',' << format_double(rep.rel_err) << ','
        << to_string(rep.status) << ',' << csv_escape(rep.notes) << '\n';
  }
  SuiteSummary s = summarize(reports);
  out << "# summary pass=" << s.pass << " fail=" << s.fail
      << " report_only=" << s.report_only << " divergent=" << s.divergent << "\n";
  return out.str();
}

/// Kernel sample rows "x,value,abs_err,flags" for plot data.
inline std::string kernel_table_csv(
    const std::vector<std::pair<double, EvalResult>>& rows) {
  std::ostringstream out;
  out << "x,value,abs_err,flags\n";
  for (const auto& [x, r] : rows)
    out << format_double(x) << ',' << format_double(r.value) << ','
        << format_double(r.abs_err_estimate) << ',' << flags_to_string(r.flags)
        << '\n';
  return out.str();
}

}  // namespace io
}  // namespace ramellin

#endif  // RAMELLIN_REPORT_IO_HPP
