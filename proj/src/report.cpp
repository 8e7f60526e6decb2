#include "orthochart/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace orthochart {

namespace {

std::string status_word(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::timeout: return "TIMEOUT";
    case Status::not_applicable: return "N/A";
  }
  return "?";
}

std::string chart_key(const ChartReport& c) {
  return "(" + std::to_string(c.d) + "," + std::to_string(c.l) + ")";
}

}  // namespace

nlohmann::json comparable_json(const SuiteReport& report) {
  nlohmann::json engine = {{"modulus", report.engine.modulus},
                           {"order", report.engine.order},
                           {"budgets",
                            {{"time_limit_ms", report.engine.time_limit_ms}, {"max_pairs", report.engine.max_pairs}}}};
  nlohmann::json charts = nlohmann::json::array();
  for (const auto& c : report.charts) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& k : c.checks) {
      checks.push_back({{"name", k.name}, {"status", to_string(k.status)}, {"witness", k.witness}});
    }
    charts.push_back({{"chart", {{"d", c.d}, {"l", c.l}, {"case", c.parity}}},
                      {"checks", checks},
                      {"engine", engine},
                      {"passed", c.passed()}});
  }
  nlohmann::json out = {{"reports", charts}, {"passed", report.passed()}};
  if (report.empty()) out["note"] = "no checks run";
  return out;
}

nlohmann::json report_json(const SuiteReport& report) {
  nlohmann::json out = comparable_json(report);
  nlohmann::json timing = nlohmann::json::object();
  for (const auto& c : report.charts) {
    for (const auto& k : c.checks) timing[chart_key(c)][k.name] = {{"millis", k.millis}};
  }
  out["timing"] = timing;
  return out;
}

std::string report_text(const SuiteReport& report) {
  std::ostringstream os;
  if (report.empty()) os << "no checks run\n";
  for (const auto& c : report.charts) {
    os << "CHART " << chart_key(c) << " " << c.parity << "\n";
    for (const auto& k : c.checks) {
      os << "CHECK " << k.name << ": " << status_word(k.status) << " (" << k.witness.dump() << ")\n";
    }
  }
  os << "RESULT: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

void emit_report(const std::string& body, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << body;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << body;
  out.close();
  if (!out) throw IoError("failed writing " + path);
}

}  // namespace orthochart
