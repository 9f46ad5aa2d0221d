#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <stdexcept>

#include "handoff/environment.hpp"

using namespace handoff;

namespace {

std::vector<GridPosition> all_cells(const GridBounds& b) {
  std::vector<GridPosition> cells;
  for (int y = 0; y < b.height; ++y)
    for (int x = 0; x < b.width; ++x) cells.push_back({x, y});
  return cells;
}

}  // namespace

TEST_CASE("default scenario layout", "[environment]") {
  const auto env = build_scenario("default");
  REQUIRE(env.width() == 23);
  REQUIRE(env.height() == 23);
  REQUIRE(env.stations().size() == 5);

  const auto& center = env.station(0);
  CHECK(center.position == GridPosition{11, 11});
  CHECK(center.base_allocation == 7.0);
  CHECK_FALSE(center.loaded_sector);

  const std::vector<GridPosition> corners{{0, 0}, {22, 0}, {22, 22}, {0, 22}};
  for (StationId id = 1; id <= 4; ++id) {
    const auto& bs = env.station(id);
    CHECK(bs.position == corners[static_cast<std::size_t>(id - 1)]);
    CHECK(bs.base_allocation == 5.0);
    CHECK_FALSE(bs.loaded_sector);
  }
}

TEST_CASE("sector_load scenario loads the center NE quadrant", "[environment]") {
  const auto env = build_scenario("sector_load");
  const auto& center = env.station(0);
  REQUIRE(center.loaded_sector);
  CHECK(center.loaded_sector->quadrant == Quadrant::NE);
  CHECK(center.loaded_sector->loaded_allocation == 1.0);
  for (StationId id = 1; id <= 4; ++id) CHECK_FALSE(env.station(id).loaded_sector);
}

TEST_CASE("build_scenario errors", "[environment]") {
  CHECK_THROWS_AS(build_scenario("downtown"), std::invalid_argument);

  ScenarioConfig two;
  two.preset = "custom";
  two.stations = std::vector<BaseStation>{{0, {0, 0}, 5.0, {}}, {1, {5, 5}, 5.0, {}}};
  CHECK_THROWS_AS(build_scenario(two), std::invalid_argument);

  ScenarioConfig outside;
  outside.preset = "custom";
  outside.stations = std::vector<BaseStation>{
      {0, {0, 0}, 5.0, {}}, {1, {5, 5}, 5.0, {}}, {2, {23, 0}, 5.0, {}}};
  CHECK_THROWS_AS(build_scenario(outside), std::invalid_argument);

  ScenarioConfig duplicate;
  duplicate.preset = "custom";
  duplicate.stations = std::vector<BaseStation>{
      {0, {0, 0}, 5.0, {}}, {1, {5, 5}, 5.0, {}}, {1, {9, 9}, 5.0, {}}};
  CHECK_THROWS_AS(build_scenario(duplicate), std::invalid_argument);

  ScenarioConfig zero_alloc;
  zero_alloc.preset = "default";
  zero_alloc.uniform_allocation = 0.0;
  CHECK_THROWS_AS(build_scenario(zero_alloc), std::invalid_argument);

  ScenarioConfig shrunk;
  shrunk.preset = "default";
  shrunk.grid = GridBounds{20, 20};  // corner stations at 22 fall outside
  CHECK_THROWS_AS(build_scenario(shrunk), std::invalid_argument);
}

TEST_CASE("uniform override flattens the allocation field", "[environment]") {
  ScenarioConfig cfg;
  cfg.preset = "sector_load";
  cfg.uniform_allocation = 5.0;
  const auto env = build_scenario(cfg);
  for (const auto& bs : env.stations())
    for (const auto& pos : all_cells(env.bounds())) CHECK(env.allocation_at(bs.id, pos) == 5.0);
  CHECK(env.allocation_levels() == std::vector<double>{5.0});
}

TEST_CASE("allocation_at examples", "[environment]") {
  const auto def = build_scenario("default");
  const auto load = build_scenario("sector_load");

  for (const auto& pos : all_cells(def.bounds())) CHECK(def.allocation_at(0, pos) == 7.0);
  CHECK(load.allocation_at(0, {18, 18}) == 1.0);
  CHECK(load.allocation_at(1, {18, 18}) == 5.0);
  CHECK(load.allocation_at(0, {5, 5}) == 7.0);

  CHECK_THROWS_AS(def.allocation_at(9, {1, 1}), std::out_of_range);
  CHECK_THROWS_AS(def.allocation_at(0, {-1, 1}), std::out_of_range);
  CHECK_THROWS_AS(def.allocation_at(0, {1, 23}), std::out_of_range);
}

TEST_CASE("in_sector examples", "[environment]") {
  const BaseStation center{0, {11, 11}, 7.0, SectorLoad{Quadrant::NE, 1.0}};
  CHECK(in_sector(center, {12, 12}));
  CHECK_FALSE(in_sector(center, {11, 15}));
  CHECK_FALSE(in_sector(center, {5, 5}));
  CHECK_FALSE(in_sector(center, {11, 11}));

  const BaseStation plain{1, {0, 0}, 5.0, std::nullopt};
  CHECK_FALSE(in_sector(plain, {12, 12}));
}

TEST_CASE("quadrants partition every cell but the origin", "[environment]") {
  const GridBounds b{23, 23};
  const GridPosition origin{11, 11};
  for (const auto& pos : all_cells(b)) {
    int hits = 0;
    for (Quadrant q : {Quadrant::NE, Quadrant::NW, Quadrant::SE, Quadrant::SW})
      hits += in_quadrant(q, origin, pos) ? 1 : 0;
    CHECK(hits == (pos == origin ? 0 : 1));
  }
}

TEST_CASE("allocation field properties", "[environment]") {
  const auto def = build_scenario("default");
  const auto load = build_scenario("sector_load");

  int sector_cells = 0;
  for (const auto& pos : all_cells(def.bounds())) {
    for (const auto& bs : load.stations()) {
      const double v = load.allocation_at(bs.id, pos);
      const bool base = v == bs.base_allocation;
      const bool loaded = bs.loaded_sector && v == bs.loaded_sector->loaded_allocation;
      CHECK((base || loaded));
      // The two presets only differ inside the center's loaded quadrant.
      const bool differs = v != def.allocation_at(bs.id, pos);
      CHECK(differs == (bs.id == 0 && in_sector(load.station(0), pos)));
    }
    sector_cells += in_sector(load.station(0), pos) ? 1 : 0;
  }
  // Half-open wedge from [11,11]: x in 12..22 (11 values), y in 11..22 (12 values).
  CHECK(sector_cells == 132);
}

TEST_CASE("parsers accept canonical names", "[environment]") {
  CHECK(parse_quadrant("ne") == Quadrant::NE);
  CHECK(parse_quadrant("SW") == Quadrant::SW);
  CHECK_THROWS_AS(parse_quadrant("N"), std::invalid_argument);
  CHECK(parse_distance_metric("Manhattan") == DistanceMetric::Manhattan);
  CHECK(parse_tie_break("descending_id") == TieBreak::DescendingId);
  CHECK_THROWS_AS(parse_tie_break("random"), std::invalid_argument);
}
