#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "handoff/agent.hpp"
#include "handoff/environment.hpp"
#include "handoff/mobility.hpp"

namespace handoff {

/// Dense per-cell values, row-major with row 0 = y 0.
template <class T>
class CellGrid {
public:
  CellGrid() = default;
  explicit CellGrid(GridBounds bounds, T fill = T{})
      : bounds_(bounds), cells_(static_cast<std::size_t>(bounds.cell_count()), fill) {}

  const GridBounds& bounds() const { return bounds_; }
  T& at(GridPosition pos) { return cells_[static_cast<std::size_t>(bounds_.index_of(pos))]; }
  const T& at(GridPosition pos) const {
    return cells_[static_cast<std::size_t>(bounds_.index_of(pos))];
  }
  std::span<T> cells() { return cells_; }
  std::span<const T> cells() const { return cells_; }

  bool operator==(const CellGrid&) const = default;

private:
  GridBounds bounds_;
  std::vector<T> cells_;
};

inline constexpr std::uint64_t kDefaultSeed = 20200601;

struct SimulationConfig {
  std::string scenario{"default"};
  Policy policy;
  WalkConfig walk;
  int rounds{1000};
  std::uint64_t seed{kDefaultSeed};
  /// Worker threads for rounds; 0 picks the hardware concurrency.
  unsigned threads{0};

  void validate() const;
};

struct RoundMetrics {
  long allocation_samples{0};
  double allocation_sum{0.0};
  long transitions{0};
  long handoffs{0};
  long overrides{0};
  long reassociations{0};
  CellGrid<double> per_cell_sum;
  CellGrid<long> per_cell_count;
  /// Cells stood on at any step, not only at walk ends.
  CellGrid<std::uint8_t> visited;

  double average() const {
    return allocation_samples > 0 ? allocation_sum / static_cast<double>(allocation_samples) : 0.0;
  }
};

using EventSink = std::function<void(const ObservationEvent&)>;

/// One fresh-agent episode: walks_per_round x {walk, evaluate, apply,
/// sample}. The sink, if set, sees every per-walk event.
RoundMetrics run_round(const Environment& env, const Policy& policy, const WalkConfig& walk,
                       RngStream rng, const EventSink& sink = {});

struct PolicySummary {
  PolicyKind policy{PolicyKind::RssiDefault};
  int rounds{0};
  double average_allocation{0.0};
  /// Standard error of average_allocation over rounds.
  double standard_error{0.0};
  long samples{0};
  long transitions{0};
  long handoffs{0};
  long overrides{0};
  long reassociations{0};
  /// Mean allocation received per walk-end cell; 0 where never sampled.
  CellGrid<double> heatmap;
  CellGrid<long> visits;

  double override_pct() const {
    return transitions > 0 ? 100.0 * static_cast<double>(overrides) / static_cast<double>(transitions)
                           : 0.0;
  }
};

/// Order-free reduction: any permutation of `rounds` gives the same summary.
PolicySummary summarize(PolicyKind policy, std::span<const RoundMetrics> rounds);

struct SummaryReport {
  SimulationConfig config;
  PolicySummary baseline;
  std::optional<PolicySummary> learning;

  /// 100 * (learning - baseline) / baseline on trial means; 0 without a
  /// learning run.
  double performance_gain_pct() const;
  const PolicySummary& primary() const { return learning ? *learning : baseline; }
};

/// All rounds of one policy, in round-index order.
std::vector<RoundMetrics> run_rounds(const Environment& env, const SimulationConfig& config,
                                     const Policy& policy);

/// Runs config.rounds rounds. A transition-learning config is paired with an
/// rssi_default run on the same round seeds.
SummaryReport run_trial(const Environment& env, const SimulationConfig& config);

/// Replays one round and returns the allocation last received at each
/// walk-end cell, 0 for cells never sampled. Throws std::out_of_range for a
/// round index outside [0, config.rounds).
CellGrid<double> snapshot_round(const Environment& env, const SimulationConfig& config,
                                int round_index);

}  // namespace handoff
