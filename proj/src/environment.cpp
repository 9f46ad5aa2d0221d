#include "handoff/environment.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>
#include <string>

namespace handoff {

namespace {

std::string upper(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string describe(GridPosition p) {
  return "[" + std::to_string(p.x) + ", " + std::to_string(p.y) + "]";
}

constexpr GridBounds kDefaultGrid{23, 23};
constexpr double kCenterAllocation = 7.0;
constexpr double kCornerAllocation = 5.0;
constexpr double kLoadedSectorAllocation = 1.0;

std::vector<BaseStation> default_stations() {
  return {
      {0, {11, 11}, kCenterAllocation, std::nullopt},
      {1, {0, 0}, kCornerAllocation, std::nullopt},
      {2, {22, 0}, kCornerAllocation, std::nullopt},
      {3, {22, 22}, kCornerAllocation, std::nullopt},
      {4, {0, 22}, kCornerAllocation, std::nullopt},
  };
}

}  // namespace

std::string_view to_string(Quadrant q) {
  switch (q) {
    case Quadrant::NE: return "NE";
    case Quadrant::NW: return "NW";
    case Quadrant::SE: return "SE";
    case Quadrant::SW: return "SW";
  }
  return "?";
}

Quadrant parse_quadrant(std::string_view text) {
  const auto u = upper(text);
  if (u == "NE") return Quadrant::NE;
  if (u == "NW") return Quadrant::NW;
  if (u == "SE") return Quadrant::SE;
  if (u == "SW") return Quadrant::SW;
  throw std::invalid_argument("unknown quadrant '" + std::string(text) + "'");
}

std::string_view to_string(DistanceMetric m) {
  return m == DistanceMetric::Euclidean ? "euclidean" : "manhattan";
}

std::string_view to_string(TieBreak t) {
  return t == TieBreak::AscendingId ? "ascending_id" : "descending_id";
}

DistanceMetric parse_distance_metric(std::string_view text) {
  const auto l = lower(text);
  if (l == "euclidean") return DistanceMetric::Euclidean;
  if (l == "manhattan") return DistanceMetric::Manhattan;
  throw std::invalid_argument("unknown distance metric '" + std::string(text) + "'");
}

TieBreak parse_tie_break(std::string_view text) {
  const auto l = lower(text);
  if (l == "ascending_id") return TieBreak::AscendingId;
  if (l == "descending_id") return TieBreak::DescendingId;
  throw std::invalid_argument("unknown tie break '" + std::string(text) + "'");
}

bool in_quadrant(Quadrant q, GridPosition origin, GridPosition pos) {
  const int dx = pos.x - origin.x;
  const int dy = pos.y - origin.y;
  switch (q) {
    case Quadrant::NE: return dx > 0 && dy >= 0;
    case Quadrant::NW: return dx <= 0 && dy > 0;
    case Quadrant::SW: return dx < 0 && dy <= 0;
    case Quadrant::SE: return dx >= 0 && dy < 0;
  }
  return false;
}

bool in_sector(const BaseStation& bs, GridPosition pos) {
  return bs.loaded_sector && in_quadrant(bs.loaded_sector->quadrant, bs.position, pos);
}

Environment::Environment(GridBounds bounds, std::vector<BaseStation> stations, RankingRule ranking)
    : bounds_(bounds), stations_(std::move(stations)), ranking_(ranking) {
  if (bounds_.width < 1 || bounds_.height < 1) {
    throw std::invalid_argument("grid dimensions must be at least 1x1");
  }
  if (stations_.size() < 3) {
    throw std::invalid_argument("environment needs at least 3 base stations, got " +
                                std::to_string(stations_.size()));
  }
  std::set<StationId> ids;
  for (const auto& bs : stations_) {
    if (!ids.insert(bs.id).second) {
      throw std::invalid_argument("duplicate base station id " + std::to_string(bs.id));
    }
    if (!bounds_.contains(bs.position)) {
      throw std::invalid_argument("base station " + std::to_string(bs.id) + " at " +
                                  describe(bs.position) + " lies outside the grid");
    }
    if (!(bs.base_allocation > 0.0)) {
      throw std::invalid_argument("base station " + std::to_string(bs.id) +
                                  " must have a positive allocation");
    }
    if (bs.loaded_sector && !(bs.loaded_sector->loaded_allocation >= 0.0)) {
      throw std::invalid_argument("base station " + std::to_string(bs.id) +
                                  " has a negative sector allocation");
    }
  }
}

const BaseStation& Environment::station(StationId id) const {
  for (const auto& bs : stations_) {
    if (bs.id == id) return bs;
  }
  throw std::out_of_range("unknown base station id " + std::to_string(id));
}

bool Environment::has_station(StationId id) const {
  return std::any_of(stations_.begin(), stations_.end(),
                     [id](const BaseStation& bs) { return bs.id == id; });
}

double Environment::allocation_at(StationId id, GridPosition pos) const {
  const auto& bs = station(id);
  if (!bounds_.contains(pos)) {
    throw std::out_of_range("position " + describe(pos) + " lies outside the grid");
  }
  return in_sector(bs, pos) ? bs.loaded_sector->loaded_allocation : bs.base_allocation;
}

std::vector<double> Environment::allocation_levels() const {
  std::set<double> levels;
  for (const auto& bs : stations_) {
    levels.insert(bs.base_allocation);
    if (bs.loaded_sector) levels.insert(bs.loaded_sector->loaded_allocation);
  }
  return {levels.begin(), levels.end()};
}

std::vector<std::string> scenario_names() { return {"default", "sector_load"}; }

Environment build_scenario(std::string_view name) {
  ScenarioConfig config;
  config.preset = std::string(name);
  return build_scenario(config);
}

Environment build_scenario(const ScenarioConfig& config) {
  GridBounds bounds = kDefaultGrid;
  std::vector<BaseStation> stations;

  if (config.preset == "default" || config.preset == "sector_load") {
    stations = default_stations();
    if (config.preset == "sector_load") {
      stations.front().loaded_sector = SectorLoad{Quadrant::NE, kLoadedSectorAllocation};
    }
  } else if (config.preset.empty() || config.preset == "custom") {
    if (!config.stations) {
      throw std::invalid_argument("custom scenario requires a station list");
    }
  } else {
    throw std::invalid_argument("unknown scenario '" + config.preset + "'");
  }

  if (config.grid) bounds = *config.grid;
  if (config.stations) stations = *config.stations;
  if (config.uniform_allocation) {
    for (auto& bs : stations) {
      bs.base_allocation = *config.uniform_allocation;
      bs.loaded_sector.reset();
    }
  }
  return Environment(bounds, std::move(stations), config.ranking.value_or(RankingRule{}));
}

}  // namespace handoff
