#pragma once

#include <array>
#include <compare>
#include <string>

#include "handoff/environment.hpp"

namespace handoff {

/// Sort key for signal strength: smaller is stronger. The id component makes
/// the order total, so ties never depend on the order stations were listed.
struct SignalKey {
  double distance{0.0};
  StationId tie_rank{0};
  StationId id{0};

  auto operator<=>(const SignalKey&) const = default;
};

SignalKey signal_rank_key(GridPosition pos, const BaseStation& bs, const RankingRule& rule = {});

/// The three strongest stations, index 0 strongest.
struct RankState {
  std::array<StationId, 3> ranks{};

  StationId strongest() const { return ranks[0]; }
  bool distinct() const {
    return ranks[0] != ranks[1] && ranks[0] != ranks[2] && ranks[1] != ranks[2];
  }

  auto operator<=>(const RankState&) const = default;
};

std::string to_string(const RankState& state);

RankState rank_top3(const Environment& env, GridPosition pos);

/// A new state needs the strongest station to change; reshuffles of ranks
/// two and three alone do not count.
inline bool is_new_state(const RankState& prev, const RankState& cur) {
  return prev.ranks[0] != cur.ranks[0];
}

}  // namespace handoff
