#include "handoff/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "handoff/mobility.hpp"
#include "handoff/signal.hpp"

namespace handoff {

std::vector<double> TransitionMatrix::row_sums() const {
  std::vector<double> sums(static_cast<std::size_t>(n_), 0.0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) sums[static_cast<std::size_t>(i)] += (*this)(i, j);
  return sums;
}

std::vector<double> TransitionMatrix::column_sums() const {
  std::vector<double> sums(static_cast<std::size_t>(n_), 0.0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) sums[static_cast<std::size_t>(j)] += (*this)(i, j);
  return sums;
}

namespace {

double max_deviation_from_one(const std::vector<double>& sums) {
  double worst = 0.0;
  for (double s : sums) worst = std::max(worst, std::abs(s - 1.0));
  return worst;
}

std::string format_double(double v, int precision = 6) {
  std::ostringstream os;
  os.precision(precision);
  os << v;
  return os.str();
}

}  // namespace

double TransitionMatrix::max_row_deviation() const { return max_deviation_from_one(row_sums()); }
double TransitionMatrix::max_column_deviation() const {
  return max_deviation_from_one(column_sums());
}

bool TransitionMatrix::reaches_all(bool transpose) const {
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  std::deque<int> frontier{0};
  seen[0] = true;
  int reached = 1;
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop_front();
    for (int v = 0; v < n_; ++v) {
      const double w = transpose ? (*this)(v, u) : (*this)(u, v);
      if (w > 0.0 && !seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        ++reached;
        frontier.push_back(v);
      }
    }
  }
  return reached == n_;
}

bool TransitionMatrix::irreducible() const {
  return n_ > 0 && reaches_all(false) && reaches_all(true);
}

bool TransitionMatrix::has_self_loop() const {
  for (int i = 0; i < n_; ++i)
    if ((*this)(i, i) > 0.0) return true;
  return false;
}

TransitionMatrix build_transition_matrix(const GridBounds& bounds) {
  if (bounds.width < 1 || bounds.height < 1) {
    throw std::invalid_argument("grid dimensions must be at least 1x1");
  }
  TransitionMatrix p(bounds.cell_count());
  for (int i = 0; i < bounds.cell_count(); ++i) {
    const GridPosition from = bounds.position_of(i);
    for (Direction d : {Direction::North, Direction::South, Direction::East, Direction::West}) {
      p(i, bounds.index_of(apply_move(from, d, bounds))) += 0.25;
    }
  }
  return p;
}

StationaryResult stationary_distribution(const TransitionMatrix& p, double tolerance,
                                         int max_iterations) {
  const int n = p.size();
  if (n == 0) throw std::invalid_argument("empty transition matrix");

  // Sparse view of the nonzero entries, column-major for pi * P.
  std::vector<std::vector<std::pair<int, double>>> incoming(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p(i, j) != 0.0) incoming[static_cast<std::size_t>(j)].emplace_back(i, p(i, j));

  StationaryResult result;
  std::vector<double> pi(static_cast<std::size_t>(n), 0.0);
  std::vector<double> next(static_cast<std::size_t>(n), 0.0);
  pi[0] = 1.0;

  for (int it = 1; it <= max_iterations; ++it) {
    double change = 0.0;
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (const auto& [i, w] : incoming[static_cast<std::size_t>(j)])
        acc += pi[static_cast<std::size_t>(i)] * w;
      next[static_cast<std::size_t>(j)] = acc;
      change += std::abs(acc - pi[static_cast<std::size_t>(j)]);
    }
    pi.swap(next);
    result.iterations = it;
    result.last_change = change;
    if (change < tolerance) {
      result.distribution = std::move(pi);
      return result;
    }
  }
  throw std::runtime_error("stationary distribution did not converge after " +
                           std::to_string(max_iterations) + " iterations (last L1 change " +
                           format_double(result.last_change) + ")");
}

double CoverageMap::fraction(StationId id) const {
  const auto it = cell_counts.find(id);
  const int count = it == cell_counts.end() ? 0 : it->second;
  return static_cast<double>(count) / static_cast<double>(bounds.cell_count());
}

CoverageMap coverage_map(const Environment& env) {
  CoverageMap map;
  map.bounds = env.bounds();
  map.nearest.resize(static_cast<std::size_t>(map.bounds.cell_count()));
  for (const auto& bs : env.stations()) map.cell_counts[bs.id] = 0;
  for (int i = 0; i < map.bounds.cell_count(); ++i) {
    const StationId id = rank_top3(env, map.bounds.position_of(i)).strongest();
    map.nearest[static_cast<std::size_t>(i)] = id;
    ++map.cell_counts[id];
  }
  return map;
}

double loaded_coverage_fraction(const Environment& env, StationId id) {
  const auto map = coverage_map(env);
  const auto& bs = env.station(id);
  int count = 0;
  for (int i = 0; i < map.bounds.cell_count(); ++i) {
    const GridPosition pos = map.bounds.position_of(i);
    if (map.at(pos) == id && in_sector(bs, pos)) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(map.bounds.cell_count());
}

double expected_baseline_allocation(const Environment& env,
                                    const std::vector<double>& distribution) {
  const auto map = coverage_map(env);
  const int n = map.bounds.cell_count();
  if (!distribution.empty() && static_cast<int>(distribution.size()) != n) {
    throw std::invalid_argument("distribution size does not match the grid");
  }
  double expected = 0.0;
  for (int i = 0; i < n; ++i) {
    const GridPosition pos = map.bounds.position_of(i);
    const double weight =
        distribution.empty() ? 1.0 / n : distribution[static_cast<std::size_t>(i)];
    expected += weight * env.allocation_at(map.at(pos), pos);
  }
  return expected;
}

std::vector<double> empirical_visit_frequencies(const GridBounds& bounds, GridPosition start,
                                                std::int64_t steps, std::uint64_t seed) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(bounds.cell_count()), 0);
  RngStream rng(seed);
  GridPosition pos = start;
  for (std::int64_t s = 0; s < steps; ++s) {
    pos = step(pos, bounds, rng);
    ++counts[static_cast<std::size_t>(bounds.index_of(pos))];
  }
  std::vector<double> freq(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    freq[i] = static_cast<double>(counts[i]) / static_cast<double>(steps);
  return freq;
}

std::vector<OracleCheck> run_oracle_suite(const Environment& env, std::int64_t empirical_steps,
                                          std::uint64_t seed) {
  std::vector<OracleCheck> checks;
  const GridBounds& bounds = env.bounds();
  const double uniform = 1.0 / bounds.cell_count();

  const auto p = build_transition_matrix(bounds);
  const double row_dev = p.max_row_deviation();
  const double col_dev = p.max_column_deviation();
  checks.push_back({"row sums equal 1", row_dev <= 1e-12, "max |sum-1| = " + format_double(row_dev)});
  checks.push_back({"doubly stochastic", row_dev <= 1e-12 && col_dev <= 1e-12,
                    "max column |sum-1| = " + format_double(col_dev)});
  checks.push_back({"irreducible", p.irreducible(), "strongly connected transition graph"});
  checks.push_back({"aperiodic", p.aperiodic(), "irreducible with boundary self-loops"});

  try {
    const auto st = stationary_distribution(p);
    double worst = 0.0;
    for (double v : st.distribution) worst = std::max(worst, std::abs(v - uniform));
    checks.push_back({"stationary distribution uniform", worst < 1e-9,
                      "max |pi - 1/" + std::to_string(bounds.cell_count()) +
                          "| = " + format_double(worst) + " after " +
                          std::to_string(st.iterations) + " iterations"});
  } catch (const std::runtime_error& e) {
    checks.push_back({"stationary distribution uniform", false, e.what()});
  }

  if (empirical_steps > 0) {
    const GridPosition start{bounds.width / 2, bounds.height / 2};
    const auto freq = empirical_visit_frequencies(bounds, start, empirical_steps, seed);
    double worst = 0.0;
    for (double f : freq) worst = std::max(worst, std::abs(f - uniform));
    checks.push_back({"empirical visit frequencies", worst <= 5e-4,
                      std::to_string(empirical_steps) + " steps, max deviation " +
                          format_double(worst)});
  }

  const auto cov = coverage_map(env);
  int total = 0;
  bool all_covered = true;
  std::ostringstream fractions;
  for (const auto& [id, count] : cov.cell_counts) {
    total += count;
    all_covered = all_covered && count > 0;
    fractions << " " << id << ":" << format_double(cov.fraction(id), 4);
  }
  checks.push_back({"coverage partitions the grid", total == bounds.cell_count(),
                    std::to_string(total) + " cells; fractions" + fractions.str()});
  checks.push_back({"every station covers a cell", all_covered, ""});

  for (const auto& bs : env.stations()) {
    if (!bs.loaded_sector) continue;
    checks.push_back({"loaded sector coverage (station " + std::to_string(bs.id) + ")", true,
                      "fraction " + format_double(loaded_coverage_fraction(env, bs.id), 4)});
  }

  const double analytic = expected_baseline_allocation(env);
  const auto levels = env.allocation_levels();
  bool consistent = analytic >= levels.front() - 1e-12 && analytic <= levels.back() + 1e-12;
  if (levels.size() == 1) consistent = std::abs(analytic - levels.front()) <= 1e-12;
  checks.push_back({"analytic baseline allocation", consistent, format_double(analytic, 6)});
  return checks;
}

}  // namespace handoff
