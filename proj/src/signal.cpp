#include "handoff/signal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace handoff {

SignalKey signal_rank_key(GridPosition pos, const BaseStation& bs, const RankingRule& rule) {
  const double dx = pos.x - bs.position.x;
  const double dy = pos.y - bs.position.y;
  const double distance = rule.metric == DistanceMetric::Euclidean
                              ? std::sqrt(dx * dx + dy * dy)
                              : std::abs(dx) + std::abs(dy);
  const StationId tie_rank = rule.tie_break == TieBreak::AscendingId ? bs.id : -bs.id;
  return {distance, tie_rank, bs.id};
}

std::string to_string(const RankState& state) {
  return "[" + std::to_string(state.ranks[0]) + "," + std::to_string(state.ranks[1]) + "," +
         std::to_string(state.ranks[2]) + "]";
}

RankState rank_top3(const Environment& env, GridPosition pos) {
  const auto stations = env.stations();
  std::vector<SignalKey> keys;
  keys.reserve(stations.size());
  for (const auto& bs : stations) keys.push_back(signal_rank_key(pos, bs, env.ranking()));
  std::partial_sort(keys.begin(), keys.begin() + 3, keys.end());
  return RankState{{keys[0].id, keys[1].id, keys[2].id}};
}

}  // namespace handoff
