#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace emocap::report {

using Json = nlohmann::json;

/// %.6g text of a value; "nan"/"inf" pass through.
std::string FormatNumber(double value);
/// JSON number rounded to 6 significant digits; null when not finite.
Json Number(double value);
Json Number(const std::optional<double>& value);

/// Dotted-path (key, value) pairs for every scalar, in sorted key order.
std::vector<std::pair<std::string, std::string>> Flatten(const Json& json);

void WriteText(const std::filesystem::path& path, const std::string& content);
void WriteJson(const std::filesystem::path& path, const Json& json);
/// Two-column `key,value` CSV of Flatten(json).
void WriteFlatCsv(const std::filesystem::path& path, const Json& json);
/// Aligned `key  value` lines of Flatten(json).
void WriteFlatText(const std::filesystem::path& path, const Json& json);
void WriteCsv(const std::filesystem::path& path, const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows);

}  // namespace emocap::report
