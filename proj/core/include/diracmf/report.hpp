#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace diracmf {

/// Machine-readable run report. Key order is fixed; re-serialising a parsed
/// report reproduces it byte for byte (the timestamp is just another field).
struct RunReport {
  std::string schema_version = "1";
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  nlohmann::ordered_json residuals = nlohmann::ordered_json::object();
  bool pass = true;
  std::string timestamp;
};

nlohmann::ordered_json report_json(const RunReport& report);
RunReport parse_report(const nlohmann::ordered_json& j);

std::string render_report(const RunReport& report);   // dump with fixed formatting

/// Writes the report; throws on an unwritable path.
void emit_report(const RunReport& report, const std::filesystem::path& path);
RunReport load_report(const std::filesystem::path& path);

std::string iso8601_now();

}  // namespace diracmf
