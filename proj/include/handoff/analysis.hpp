#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "handoff/environment.hpp"

namespace handoff {

/// Dense single-step transition matrix of the clamped N/S/E/W walk over all
/// grid cells, indexed by GridBounds::index_of.
class TransitionMatrix {
public:
  explicit TransitionMatrix(int states) : n_(states), p_(static_cast<std::size_t>(states) * states) {}

  int size() const { return n_; }
  double operator()(int from, int to) const { return p_[index(from, to)]; }
  double& operator()(int from, int to) { return p_[index(from, to)]; }

  std::vector<double> row_sums() const;
  std::vector<double> column_sums() const;

  /// Largest |sum - 1| over rows (or columns).
  double max_row_deviation() const;
  double max_column_deviation() const;

  /// Every state reaches every other through positive entries, in both
  /// directions.
  bool irreducible() const;
  bool has_self_loop() const;
  /// Irreducible with a self-loop, which rules out any period above one.
  bool aperiodic() const { return irreducible() && has_self_loop(); }

private:
  std::size_t index(int from, int to) const {
    return static_cast<std::size_t>(from) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(to);
  }
  bool reaches_all(bool transpose) const;

  int n_;
  std::vector<double> p_;
};

TransitionMatrix build_transition_matrix(const GridBounds& bounds);

struct StationaryResult {
  std::vector<double> distribution;
  int iterations{0};
  double last_change{0.0};
};

/// Power iteration from a point mass on state 0 until the L1 change between
/// iterates drops below `tolerance`. Throws std::runtime_error past
/// `max_iterations`.
StationaryResult stationary_distribution(const TransitionMatrix& p, double tolerance = 1e-12,
                                         int max_iterations = 1'000'000);

/// Nearest station per cell, using the environment's ranking rule.
struct CoverageMap {
  GridBounds bounds;
  std::vector<StationId> nearest;  // row-major
  std::map<StationId, int> cell_counts;

  StationId at(GridPosition pos) const {
    return nearest[static_cast<std::size_t>(bounds.index_of(pos))];
  }
  double fraction(StationId id) const;
};

CoverageMap coverage_map(const Environment& env);

/// Fraction of all cells that are covered by `id` and lie in its loaded
/// sector.
double loaded_coverage_fraction(const Environment& env, StationId id);

/// Stationary expectation of the allocation received under always-closest
/// association. With no distribution given, the uniform one is used.
double expected_baseline_allocation(const Environment& env,
                                    const std::vector<double>& distribution = {});

/// Sample visit frequencies of one long clamped walk.
std::vector<double> empirical_visit_frequencies(const GridBounds& bounds, GridPosition start,
                                                std::int64_t steps, std::uint64_t seed);

struct OracleCheck {
  std::string name;
  bool passed{false};
  std::string detail;
};

/// The full oracle suite behind `validate`: chain properties, stationary
/// distribution, coverage and analytic baselines.
std::vector<OracleCheck> run_oracle_suite(const Environment& env, std::int64_t empirical_steps,
                                          std::uint64_t seed);

}  // namespace handoff
