#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "handoff/environment.hpp"

namespace handoff {

/// Scenario file layout (JSON):
///
///   {
///     "name": "my_scenario",                      optional label
///     "preset": "default",                        optional base preset
///     "grid": {"width": 23, "height": 23},
///     "stations": [
///       {"id": 0, "x": 11, "y": 11, "allocation": 7,
///        "sector": {"quadrant": "NE", "allocation": 1}}
///     ],
///     "uniform_allocation": 5,                    optional
///     "ranking": {"metric": "euclidean", "tie_break": "ascending_id"}
///   }
///
/// A file with stations but no preset describes a custom scenario. Unknown
/// keys are rejected.
struct ScenarioFile {
  std::string name;
  ScenarioConfig config;
};

ScenarioFile parse_scenario_json(const nlohmann::json& doc);
ScenarioFile parse_scenario_text(std::string_view text);
ScenarioFile load_scenario_file(const std::filesystem::path& path);

/// Fully resolved description of an environment, in the same layout.
nlohmann::json environment_to_json(const Environment& env);

}  // namespace handoff
