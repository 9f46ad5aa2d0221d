#include "handoff/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "handoff/signal.hpp"

namespace handoff {

void SimulationConfig::validate() const {
  walk.validate();
  if (rounds < 1) throw std::invalid_argument("rounds must be at least 1");
}

RoundMetrics run_round(const Environment& env, const Policy& policy, const WalkConfig& walk,
                       RngStream rng, const EventSink& sink) {
  const GridBounds& bounds = env.bounds();
  if (!bounds.contains(walk.start)) throw std::invalid_argument("walk start lies outside the grid");

  RoundMetrics m;
  m.per_cell_sum = CellGrid<double>(bounds);
  m.per_cell_count = CellGrid<long>(bounds);
  m.visited = CellGrid<std::uint8_t>(bounds);

  AgentState agent = AgentState::start(env, walk.start);
  m.visited.at(agent.position) = 1;

  for (int w = 0; w < walk.walks_per_round; ++w) {
    for (int s = 0; s < walk.steps_per_walk; ++s) {
      agent.position = step(agent.position, bounds, rng);
      m.visited.at(agent.position) = 1;
    }

    const Decision decision = evaluate(agent, env, policy);
    const ObservationEvent event = apply_decision(agent, env, decision, policy);

    switch (event.kind) {
      case DecisionKind::Handoff: ++m.transitions; ++m.handoffs; break;
      case DecisionKind::Override: ++m.transitions; ++m.overrides; break;
      case DecisionKind::Reassociate: ++m.reassociations; break;
      case DecisionKind::NoChange: break;
    }
    ++m.allocation_samples;
    m.allocation_sum += event.allocation;
    m.per_cell_sum.at(event.position) += event.allocation;
    ++m.per_cell_count.at(event.position);

    if (sink) sink(event);
  }
  return m;
}

PolicySummary summarize(PolicyKind policy, std::span<const RoundMetrics> rounds) {
  if (rounds.empty()) throw std::invalid_argument("cannot summarize zero rounds");
  const GridBounds bounds = rounds.front().per_cell_sum.bounds();

  PolicySummary s;
  s.policy = policy;
  s.rounds = static_cast<int>(rounds.size());
  s.heatmap = CellGrid<double>(bounds);
  s.visits = CellGrid<long>(bounds);
  CellGrid<double> sums(bounds);

  std::vector<double> averages;
  averages.reserve(rounds.size());
  for (const auto& r : rounds) {
    averages.push_back(r.average());
    s.samples += r.allocation_samples;
    s.transitions += r.transitions;
    s.handoffs += r.handoffs;
    s.overrides += r.overrides;
    s.reassociations += r.reassociations;
    for (std::size_t i = 0; i < sums.cells().size(); ++i) {
      sums.cells()[i] += r.per_cell_sum.cells()[i];
      s.visits.cells()[i] += r.per_cell_count.cells()[i];
    }
  }

  // Summing in sorted order keeps the mean independent of round order.
  std::sort(averages.begin(), averages.end());
  double total = 0.0;
  for (double a : averages) total += a;
  const double n = static_cast<double>(averages.size());
  s.average_allocation = total / n;
  if (averages.size() > 1) {
    double ss = 0.0;
    for (double a : averages) ss += (a - s.average_allocation) * (a - s.average_allocation);
    s.standard_error = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  }

  for (std::size_t i = 0; i < sums.cells().size(); ++i) {
    const long count = s.visits.cells()[i];
    s.heatmap.cells()[i] = count > 0 ? sums.cells()[i] / static_cast<double>(count) : 0.0;
  }
  return s;
}

double SummaryReport::performance_gain_pct() const {
  if (!learning || baseline.average_allocation == 0.0) return 0.0;
  return 100.0 * (learning->average_allocation - baseline.average_allocation) /
         baseline.average_allocation;
}

std::vector<RoundMetrics> run_rounds(const Environment& env, const SimulationConfig& config,
                                     const Policy& policy) {
  config.validate();
  std::vector<RoundMetrics> results(static_cast<std::size_t>(config.rounds));

  unsigned workers = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  workers = std::clamp(workers, 1u, static_cast<unsigned>(config.rounds));

  std::atomic<int> next{0};
  auto work = [&] {
    for (int r = next++; r < config.rounds; r = next++) {
      results[static_cast<std::size_t>(r)] =
          run_round(env, policy, config.walk, RngStream::for_round(config.seed, r));
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  }
  return results;
}

SummaryReport run_trial(const Environment& env, const SimulationConfig& config) {
  config.validate();
  SummaryReport report;
  report.config = config;

  Policy baseline = config.policy;
  baseline.kind = PolicyKind::RssiDefault;
  report.baseline = summarize(PolicyKind::RssiDefault, run_rounds(env, config, baseline));

  if (config.policy.learns()) {
    report.learning =
        summarize(PolicyKind::TransitionLearning, run_rounds(env, config, config.policy));
  }
  return report;
}

CellGrid<double> snapshot_round(const Environment& env, const SimulationConfig& config,
                                int round_index) {
  config.validate();
  if (round_index < 0 || round_index >= config.rounds) {
    throw std::out_of_range("round index " + std::to_string(round_index) + " outside [0, " +
                            std::to_string(config.rounds) + ")");
  }
  CellGrid<double> grid(env.bounds());
  run_round(env, config.policy, config.walk, RngStream::for_round(config.seed, round_index),
            [&grid](const ObservationEvent& e) { grid.at(e.position) = e.allocation; });
  return grid;
}

}  // namespace handoff
