#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace handoff {

using StationId = std::int32_t;

/// Integer cell coordinates. N = +y, E = +x; one unit is one city block.
struct GridPosition {
  int x{0};
  int y{0};

  auto operator<=>(const GridPosition&) const = default;
};

struct GridBounds {
  int width{23};
  int height{23};

  bool contains(GridPosition pos) const {
    return pos.x >= 0 && pos.y >= 0 && pos.x < width && pos.y < height;
  }
  int cell_count() const { return width * height; }
  // Row-major, row 0 = y 0.
  int index_of(GridPosition pos) const { return pos.y * width + pos.x; }
  GridPosition position_of(int index) const { return {index % width, index / width}; }

  bool operator==(const GridBounds&) const = default;
};

enum class Quadrant { NE, NW, SE, SW };

std::string_view to_string(Quadrant q);
/// Accepts "NE", "NW", "SE", "SW" (case-insensitive).
Quadrant parse_quadrant(std::string_view text);

struct SectorLoad {
  Quadrant quadrant{Quadrant::NE};
  double loaded_allocation{1.0};
};

struct BaseStation {
  StationId id{0};
  GridPosition position;
  double base_allocation{5.0};
  std::optional<SectorLoad> loaded_sector;
};

/// Distance used as the RSSI proxy. Any monotone transform of Euclidean
/// distance ranks identically; Manhattan is available for sensitivity runs.
enum class DistanceMetric { Euclidean, Manhattan };

/// Order applied to stations at equal distance.
enum class TieBreak { AscendingId, DescendingId };

struct RankingRule {
  DistanceMetric metric{DistanceMetric::Euclidean};
  TieBreak tie_break{TieBreak::AscendingId};

  bool operator==(const RankingRule&) const = default;
};

std::string_view to_string(DistanceMetric m);
std::string_view to_string(TieBreak t);
DistanceMetric parse_distance_metric(std::string_view text);
TieBreak parse_tie_break(std::string_view text);

/// Quadrant membership relative to the owning station. Each quadrant is a
/// half-open 90 degree wedge, counter-clockwise from its leading axis:
///   NE: dx > 0, dy >= 0     NW: dx <= 0, dy > 0
///   SW: dx < 0, dy <= 0     SE: dx >= 0, dy < 0
/// The four wedges partition every cell except the station's own.
bool in_quadrant(Quadrant q, GridPosition origin, GridPosition pos);

/// True iff the station has a loaded sector and pos falls inside it.
bool in_sector(const BaseStation& bs, GridPosition pos);

/// Immutable grid world. Construction validates the invariants:
/// at least three stations, unique ids, positive allocations, all stations
/// inside the grid.
class Environment {
public:
  Environment(GridBounds bounds, std::vector<BaseStation> stations, RankingRule ranking = {});

  const GridBounds& bounds() const { return bounds_; }
  int width() const { return bounds_.width; }
  int height() const { return bounds_.height; }
  std::span<const BaseStation> stations() const { return stations_; }
  const RankingRule& ranking() const { return ranking_; }

  bool contains(GridPosition pos) const { return bounds_.contains(pos); }

  /// Throws std::out_of_range for an unknown id.
  const BaseStation& station(StationId id) const;
  bool has_station(StationId id) const;

  /// Allocation delivered by station `id` to a UE at `pos`: the sector's
  /// loaded allocation inside a loaded sector, the base allocation elsewhere.
  /// Independent of distance. Throws std::out_of_range for an unknown id or
  /// an off-grid position.
  double allocation_at(StationId id, GridPosition pos) const;

  /// Distinct allocation values any station can deliver, ascending.
  std::vector<double> allocation_levels() const;

private:
  GridBounds bounds_;
  std::vector<BaseStation> stations_;
  RankingRule ranking_;
};

/// Overrides applied on top of a named preset (or replacing it wholesale
/// when `stations` is set).
struct ScenarioConfig {
  std::string preset{"default"};
  std::optional<GridBounds> grid;
  std::optional<std::vector<BaseStation>> stations;
  std::optional<double> uniform_allocation;
  std::optional<RankingRule> ranking;
};

/// Named presets:
///   default      center [11,11] id 0 allocation 7; corners [0,0], [22,0],
///                [22,22], [0,22] ids 1..4 allocation 5.
///   sector_load  default plus the center station's NE quadrant loaded to 1.
/// Throws std::invalid_argument for an unknown name or an invalid result.
Environment build_scenario(std::string_view name);
Environment build_scenario(const ScenarioConfig& config);

std::vector<std::string> scenario_names();

}  // namespace handoff
