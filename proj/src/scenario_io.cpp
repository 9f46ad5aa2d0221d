#include "handoff/scenario_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace handoff {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) {
      throw std::invalid_argument("unknown key '" + key + "' in " + where);
    }
  }
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) {
    throw std::invalid_argument("missing '" + std::string(key) + "' in " + where);
  }
  return obj.at(key);
}

BaseStation parse_station(const json& s, std::size_t index) {
  const std::string where = "stations[" + std::to_string(index) + "]";
  if (!s.is_object()) throw std::invalid_argument(where + " must be an object");
  reject_unknown_keys(s, {"id", "x", "y", "allocation", "sector"}, where);

  BaseStation bs;
  bs.id = require(s, "id", where).get<StationId>();
  bs.position = {require(s, "x", where).get<int>(), require(s, "y", where).get<int>()};
  bs.base_allocation = require(s, "allocation", where).get<double>();
  if (s.contains("sector") && !s.at("sector").is_null()) {
    const auto& sec = s.at("sector");
    const std::string swhere = where + ".sector";
    reject_unknown_keys(sec, {"quadrant", "allocation"}, swhere);
    bs.loaded_sector = SectorLoad{parse_quadrant(require(sec, "quadrant", swhere).get<std::string>()),
                                  require(sec, "allocation", swhere).get<double>()};
  }
  return bs;
}

}  // namespace

ScenarioFile parse_scenario_json(const json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("scenario file must be a JSON object");
  reject_unknown_keys(doc, {"name", "preset", "grid", "stations", "uniform_allocation", "ranking"},
                      "scenario file");

  ScenarioFile file;
  try {
    if (doc.contains("preset")) {
      file.config.preset = doc.at("preset").get<std::string>();
    } else if (doc.contains("stations")) {
      file.config.preset = "custom";
    }
    if (doc.contains("grid")) {
      const auto& g = doc.at("grid");
      reject_unknown_keys(g, {"width", "height"}, "grid");
      file.config.grid = GridBounds{require(g, "width", "grid").get<int>(),
                                    require(g, "height", "grid").get<int>()};
    }
    if (doc.contains("stations")) {
      const auto& arr = doc.at("stations");
      if (!arr.is_array()) throw std::invalid_argument("'stations' must be an array");
      std::vector<BaseStation> stations;
      for (std::size_t i = 0; i < arr.size(); ++i) stations.push_back(parse_station(arr[i], i));
      file.config.stations = std::move(stations);
    }
    if (doc.contains("uniform_allocation")) {
      file.config.uniform_allocation = doc.at("uniform_allocation").get<double>();
    }
    if (doc.contains("ranking")) {
      const auto& r = doc.at("ranking");
      reject_unknown_keys(r, {"metric", "tie_break"}, "ranking");
      RankingRule rule;
      if (r.contains("metric")) rule.metric = parse_distance_metric(r.at("metric").get<std::string>());
      if (r.contains("tie_break")) rule.tie_break = parse_tie_break(r.at("tie_break").get<std::string>());
      file.config.ranking = rule;
    }
    file.name = doc.contains("name") ? doc.at("name").get<std::string>() : file.config.preset;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed scenario file: ") + e.what());
  }
  return file;
}

ScenarioFile parse_scenario_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("scenario file is not valid JSON: ") + e.what());
  }
  return parse_scenario_json(doc);
}

ScenarioFile load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open scenario file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_text(buffer.str());
}

json environment_to_json(const Environment& env) {
  json stations = json::array();
  for (const auto& bs : env.stations()) {
    json s{{"id", bs.id}, {"x", bs.position.x}, {"y", bs.position.y}, {"allocation", bs.base_allocation}};
    if (bs.loaded_sector) {
      s["sector"] = {{"quadrant", std::string(to_string(bs.loaded_sector->quadrant))},
                     {"allocation", bs.loaded_sector->loaded_allocation}};
    }
    stations.push_back(std::move(s));
  }
  return {{"grid", {{"width", env.width()}, {"height", env.height()}}},
          {"stations", std::move(stations)},
          {"ranking",
           {{"metric", std::string(to_string(env.ranking().metric))},
            {"tie_break", std::string(to_string(env.ranking().tie_break))}}}};
}

}  // namespace handoff
