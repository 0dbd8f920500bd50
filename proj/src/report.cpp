#include "riesz/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace riesz {

nlohmann::json RunReport::to_json() const {
  nlohmann::json doc;
  doc["command"] = command;
  doc["inputs"] = inputs;
  doc["outputs"] = outputs;
  doc["seed"] = seed;
  doc["version"] = version;
  return doc;
}

void write_json_report(const RunReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << report.to_json().dump(2) << '\n';
}

std::vector<std::string> validate_run_report(const nlohmann::json& doc) {
  std::vector<std::string> problems;
  if (!doc.is_object()) {
    problems.push_back("document is not a JSON object");
    return problems;
  }
  auto need = [&](const char* key, bool ok, const char* type) {
    if (!doc.contains(key))
      problems.push_back(std::string("missing required key: ") + key);
    else if (!ok)
      problems.push_back(std::string(key) + " must be " + type);
  };
  need("command", doc.contains("command") && doc["command"].is_string(), "a string");
  need("inputs", doc.contains("inputs") && doc["inputs"].is_object(), "an object");
  need("outputs", doc.contains("outputs") && doc["outputs"].is_object(), "an object");
  need("seed", doc.contains("seed") && doc["seed"].is_number_unsigned(),
       "an unsigned integer");
  need("version", doc.contains("version") && doc["version"].is_string(), "a string");
  return problems;
}

std::string format_double(double v) {
  // shortest representation that round-trips
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    double back = 0.0;
    std::sscanf(buf, "%lg", &back);
    if (back == v || (std::isnan(back) && std::isnan(v))) return buf;
  }
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_to_string(const std::vector<CsvRow>& rows) {
  std::ostringstream os;
  os << "p,norm,method,err\n";
  for (const auto& r : rows)
    os << format_double(r.p) << ',' << format_double(r.norm) << ',' << r.method << ','
       << format_double(r.err) << '\n';
  return os.str();
}

void write_csv(const std::string& path, const std::vector<CsvRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << csv_to_string(rows);
}

}  // namespace riesz
