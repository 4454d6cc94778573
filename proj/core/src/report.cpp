#include "diracmf/report.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace diracmf {

nlohmann::ordered_json report_json(const RunReport& report) {
  nlohmann::ordered_json j;
  j["schema_version"] = report.schema_version;
  j["config"] = report.config;
  j["results"] = report.results;
  j["residuals"] = report.residuals;
  j["pass"] = report.pass;
  j["timestamp"] = report.timestamp;
  return j;
}

RunReport parse_report(const nlohmann::ordered_json& j) {
  RunReport r;
  r.schema_version = j.at("schema_version").get<std::string>();
  r.config = j.at("config");
  r.results = j.at("results");
  r.residuals = j.at("residuals");
  r.pass = j.at("pass").get<bool>();
  r.timestamp = j.at("timestamp").get<std::string>();
  return r;
}

std::string render_report(const RunReport& report) { return report_json(report).dump(2) + "\n"; }

void emit_report(const RunReport& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write report to " + path.string());
  out << render_report(report);
  if (!out) throw std::runtime_error("short write while emitting report to " + path.string());
}

RunReport load_report(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read report from " + path.string());
  nlohmann::ordered_json j;
  in >> j;
  return parse_report(j);
}

std::string iso8601_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
  return buf;
}

}  // namespace diracmf
