#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "slicecal/model.hpp"

namespace slicecal {

nlohmann::json to_json(const Instance& instance);
nlohmann::json to_json(const Schedule& schedule);
nlohmann::json to_json(const ValidationReport& report);

// Both throw Error(InvalidInput) naming the offending field.
Instance instance_from_json(const nlohmann::json& doc);
Schedule schedule_from_json(const nlohmann::json& doc);

/// Parses JSON text; syntax errors become Error(InvalidInput) carrying the
/// line and column of the failure. `origin` prefixes the message.
nlohmann::json parse_json(const std::string& text, const std::string& origin);
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace slicecal
