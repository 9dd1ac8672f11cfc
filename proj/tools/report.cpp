#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "emocap/csv.hpp"
#include "emocap/error.hpp"

namespace emocap::report {

std::string FormatNumber(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

Json Number(double value) {
  if (!std::isfinite(value)) return nullptr;
  const double rounded = std::strtod(FormatNumber(value).c_str(), nullptr);
  return rounded == 0.0 ? 0.0 : rounded;  // no "-0.0"
}

Json Number(const std::optional<double>& value) {
  return value ? Number(*value) : Json(nullptr);
}

namespace {

std::string ScalarText(const Json& j) {
  if (j.is_null()) return "";
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_float()) return FormatNumber(j.get<double>());
  return j.dump();
}

void FlattenInto(const Json& j, const std::string& prefix,
                 std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      FlattenInto(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      FlattenInto(j[i], prefix + "." + std::to_string(i), out);
    }
  } else {
    out.emplace_back(prefix, ScalarText(j));
  }
}

}  // namespace

std::vector<std::pair<std::string, std::string>> Flatten(const Json& json) {
  std::vector<std::pair<std::string, std::string>> out;
  FlattenInto(json, "", out);
  return out;
}

void WriteText(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << content;
  if (!out) throw DataError("write failed for " + path.string());
}

void WriteJson(const std::filesystem::path& path, const Json& json) {
  WriteText(path, json.dump(2) + "\n");
}

void WriteFlatCsv(const std::filesystem::path& path, const Json& json) {
  std::vector<std::vector<std::string>> rows;
  for (auto& [k, v] : Flatten(json)) rows.push_back({k, v});
  WriteCsv(path, {"key", "value"}, rows);
}

void WriteFlatText(const std::filesystem::path& path, const Json& json) {
  const auto flat = Flatten(json);
  std::size_t width = 0;
  for (const auto& [k, v] : flat) width = std::max(width, k.size());
  std::ostringstream out;
  for (const auto& [k, v] : flat) {
    out << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  }
  WriteText(path, out.str());
}

void WriteCsv(const std::filesystem::path& path, const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  csv::WriteRow(out, header);
  for (const auto& row : rows) csv::WriteRow(out, row);
  WriteText(path, out.str());
}

}  // namespace emocap::report
