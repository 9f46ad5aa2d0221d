#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "handoff/signal.hpp"

using namespace handoff;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<GridPosition> all_cells(const GridBounds& b) {
  std::vector<GridPosition> cells;
  for (int y = 0; y < b.height; ++y)
    for (int x = 0; x < b.width; ++x) cells.push_back({x, y});
  return cells;
}

// Exact integer squared distance, independent of the floating-point path.
long d2(GridPosition a, GridPosition b) {
  const long dx = a.x - b.x;
  const long dy = a.y - b.y;
  return dx * dx + dy * dy;
}

}  // namespace

TEST_CASE("signal_rank_key examples", "[signal]") {
  const auto env = build_scenario("default");
  CHECK(signal_rank_key({11, 11}, env.station(0)).distance == 0.0);
  for (StationId id = 1; id <= 4; ++id) {
    CHECK_THAT(signal_rank_key({11, 11}, env.station(id)).distance,
               WithinAbs(std::sqrt(242.0), 1e-12));
  }
  CHECK(signal_rank_key({0, 1}, env.station(1)) < signal_rank_key({0, 1}, env.station(4)));
  CHECK(signal_rank_key({0, 1}, env.station(1)).distance == 1.0);
  CHECK(signal_rank_key({0, 1}, env.station(4)).distance == 21.0);
}

TEST_CASE("rank_top3 examples", "[signal]") {
  const auto env = build_scenario("default");
  // Center coincident; four-way corner tie resolved by ascending id.
  CHECK(rank_top3(env, {11, 11}) == RankState{{0, 1, 2}});
  CHECK(rank_top3(env, {0, 0}).strongest() == 1);
  CHECK(rank_top3(env, {22, 22}).strongest() == 3);
  // Diagonal tie between the center and [0,0]: the center (lower id) wins.
  CHECK(rank_top3(env, {5, 6}).strongest() == 0);
  CHECK(rank_top3(env, {5, 5}).strongest() == 1);
}

TEST_CASE("rank_top3 agrees with an exact brute-force ranking on every cell", "[signal]") {
  const auto env = build_scenario("default");
  for (const auto& pos : all_cells(env.bounds())) {
    std::vector<std::pair<long, StationId>> keys;
    for (const auto& bs : env.stations()) keys.emplace_back(d2(pos, bs.position), bs.id);
    std::sort(keys.begin(), keys.end());
    const RankState expected{{keys[0].second, keys[1].second, keys[2].second}};
    const RankState got = rank_top3(env, pos);
    CHECK(got == expected);
    CHECK(got.distinct());
    CHECK(rank_top3(env, pos) == got);
  }
}

TEST_CASE("rank states mirror under x -> 22 - x", "[signal]") {
  // Reflection swaps [0,0]<->[22,0] (ids 1,2) and [22,22]<->[0,22] (ids 3,4).
  const auto env = build_scenario("default");
  const std::map<StationId, StationId> relabel{{0, 0}, {1, 2}, {2, 1}, {3, 4}, {4, 3}};
  int exact = 0;
  for (const auto& pos : all_cells(env.bounds())) {
    const GridPosition mirror{22 - pos.x, pos.y};
    const RankState a = rank_top3(env, pos);
    const RankState b = rank_top3(env, mirror);
    RankState mapped{};
    for (int i = 0; i < 3; ++i) mapped.ranks[i] = relabel.at(a.ranks[i]);
    if (mapped == b) {
      ++exact;
      continue;
    }
    // Only distance ties may break the symmetry: the distance profiles match.
    for (int i = 0; i < 3; ++i) {
      CHECK(d2(pos, env.station(a.ranks[i]).position) ==
            d2(mirror, env.station(b.ranks[i]).position));
    }
  }
  CHECK(exact > 400);
  CHECK(rank_top3(env, {1, 0}).strongest() == 1);
  CHECK(rank_top3(env, {21, 0}).strongest() == 2);
}

TEST_CASE("station list order does not affect ranking", "[signal]") {
  const auto env = build_scenario("default");
  std::vector<BaseStation> shuffled(env.stations().begin(), env.stations().end());
  std::mt19937 gen(7);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(shuffled.begin(), shuffled.end(), gen);
    const Environment other(env.bounds(), shuffled);
    for (const auto& pos : all_cells(env.bounds())) CHECK(rank_top3(other, pos) == rank_top3(env, pos));
  }
}

TEST_CASE("tie-break rule is configurable", "[signal]") {
  const auto base = build_scenario("default");
  const std::vector<BaseStation> stations(base.stations().begin(), base.stations().end());
  const Environment desc(base.bounds(), stations, {DistanceMetric::Euclidean, TieBreak::DescendingId});
  CHECK(rank_top3(desc, {11, 11}) == RankState{{0, 4, 3}});
  CHECK(rank_top3(desc, {5, 6}).strongest() == 1);

  const Environment manhattan(base.bounds(), stations, {DistanceMetric::Manhattan, TieBreak::AscendingId});
  CHECK(signal_rank_key({3, 4}, manhattan.station(1), manhattan.ranking()).distance == 7.0);
}

TEST_CASE("is_new_state depends only on the strongest station", "[signal]") {
  const RankState abc{{0, 1, 2}};
  CHECK_FALSE(is_new_state(abc, RankState{{0, 2, 1}}));
  CHECK(is_new_state(abc, RankState{{1, 0, 2}}));
  CHECK_FALSE(is_new_state(abc, abc));

  std::mt19937 gen(3);
  std::uniform_int_distribution<int> id(0, 4);
  for (int i = 0; i < 1000; ++i) {
    const RankState a{{id(gen), id(gen), id(gen)}};
    const RankState b{{id(gen), id(gen), id(gen)}};
    CHECK_FALSE(is_new_state(a, a));
    CHECK(is_new_state(a, b) == (a.ranks[0] != b.ranks[0]));
  }
}
