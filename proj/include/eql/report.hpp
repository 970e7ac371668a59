#pragma once

// Machine-readable experiment reports: deterministic given seed and
// parameters, emitted as JSON (full object) or CSV (header + rows, verdicts
// as trailing comment lines).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eql/geometry.hpp"
#include "eql/version.hpp"

namespace eql {

using Json = nlohmann::ordered_json;

struct Verdict {
  std::string name;
  bool pass = false;
  double threshold = 0.0;
  std::string detail;
};

struct ExperimentReport {
  std::string experiment;
  Json params = Json::object();
  std::vector<Json> rows;
  std::vector<Verdict> verdicts;

  bool all_pass() const {
    for (const auto& v : verdicts)
      if (!v.pass) return false;
    return true;
  }

  Json to_json() const {
    Json j;
    j["schema"] = kReportSchema;
    j["version"] = kVersion;
    j["experiment"] = experiment;
    j["params"] = params;
    j["rows"] = rows;
    Json vs = Json::array();
    for (const auto& v : verdicts)
      vs.push_back({{"name", v.name},
                    {"pass", v.pass},
                    {"threshold", v.threshold},
                    {"detail", v.detail}});
    j["verdicts"] = vs;
    return j;
  }

  std::string to_csv() const {
    std::ostringstream out;
    char buf[64];
    auto cell = [&](const Json& v) -> std::string {
      if (v.is_number_float()) {
        std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
        return buf;
      }
      if (v.is_string()) return v.get<std::string>();
      return v.dump();
    };
    out << "# experiment=" << experiment << " version=" << kVersion << "\n";
    for (auto it = params.begin(); it != params.end(); ++it)
      out << "# param " << it.key() << "=" << cell(it.value()) << "\n";
    if (!rows.empty()) {
      bool first = true;
      for (auto it = rows.front().begin(); it != rows.front().end(); ++it) {
        out << (first ? "" : ",") << it.key();
        first = false;
      }
      out << "\n";
      for (const auto& row : rows) {
        bool f = true;
        for (auto it = row.begin(); it != row.end(); ++it) {
          out << (f ? "" : ",") << cell(it.value());
          f = false;
        }
        out << "\n";
      }
    }
    for (const auto& v : verdicts)
      out << "# verdict " << v.name << " pass=" << (v.pass ? "true" : "false")
          << " threshold=" << cell(Json(v.threshold))
          << (v.detail.empty() ? "" : " " + v.detail) << "\n";
    return out.str();
  }

  void write(const std::string& path, const std::string& format) const {
    std::string body;
    if (format == "json")
      body = to_json().dump(2) + "\n";
    else if (format == "csv")
      body = to_csv();
    else
      throw ValidationError("unknown report format: " + format);
    if (path.empty() || path == "-") {
      std::cout << body;
    } else {
      std::ofstream out(path);
      if (!out) throw ValidationError("cannot write report: " + path);
      out << body;
    }
  }
};

}  // namespace eql
