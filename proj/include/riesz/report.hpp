#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace riesz {

inline constexpr const char* kToolVersion = "0.1.0";

/// One CLI run: command echo, effective inputs, named outputs. Files written
/// with a fixed seed are byte-identical across runs and thread counts, so
/// wall time is kept out of the serialized document (console echo only).
struct RunReport {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json outputs = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::string version = kToolVersion;
  double wall_ms = 0.0;

  nlohmann::json to_json() const;  // deterministic document (no timing)
};

void write_json_report(const RunReport& report, const std::string& path);

/// Structural validation mirroring schemas/runreport.schema.json: required
/// keys and types. Returns human-readable problems, empty when valid.
std::vector<std::string> validate_run_report(const nlohmann::json& doc);

struct CsvRow {
  double p = 0.0;
  double norm = 0.0;
  std::string method;
  double err = 0.0;
};

/// Schema is pinned: header exactly "p,norm,method,err".
void write_csv(const std::string& path, const std::vector<CsvRow>& rows);
std::string csv_to_string(const std::vector<CsvRow>& rows);

/// Shortest round-trip decimal form of a double (deterministic).
std::string format_double(double v);

}  // namespace riesz
