#include "handoff/report.hpp"

#include <cstdio>
#include <ostream>

#include "handoff/scenario_io.hpp"

namespace handoff {

std::string format_fixed4(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", value);
  std::string s(buf);
  if (s == "-0.0000") s = "0.0000";
  return s;
}

namespace {

void write_row(const SummaryReport& report, const PolicySummary& s, double gain, std::ostream& out) {
  out << report.config.scenario << ',' << to_string(s.policy) << ','
      << format_fixed4(s.average_allocation) << ',' << format_fixed4(s.override_pct()) << ','
      << format_fixed4(gain) << ',' << report.config.rounds << ','
      << report.config.walk.walks_per_round << ',' << report.config.seed << '\n';
}

template <class T, class Fmt>
void write_grid(const CellGrid<T>& grid, std::ostream& out, Fmt fmt) {
  const GridBounds& b = grid.bounds();
  for (int y = 0; y < b.height; ++y) {
    for (int x = 0; x < b.width; ++x) {
      if (x > 0) out << ',';
      out << fmt(grid.at({x, y}));
    }
    out << '\n';
  }
}

}  // namespace

void write_summary_csv(const SummaryReport& report, bool include_baseline, std::ostream& out,
                       bool header) {
  if (header) {
    out << "scenario,policy,avg_allocation,override_pct,performance_gain_pct,rounds,walks,seed\n";
  }
  if (include_baseline || !report.learning) write_row(report, report.baseline, 0.0, out);
  if (report.learning) write_row(report, *report.learning, report.performance_gain_pct(), out);
}

void write_grid_csv(const CellGrid<double>& grid, std::ostream& out) {
  write_grid(grid, out, [](double v) { return format_fixed4(v); });
}

void write_grid_csv(const CellGrid<long>& grid, std::ostream& out) {
  write_grid(grid, out, [](long v) { return v; });
}

nlohmann::json run_manifest(const SimulationConfig& config, const Environment& env,
                            const std::string& policy_label) {
  return {
      {"scenario", config.scenario},
      {"environment", environment_to_json(env)},
      {"policy", policy_label},
      {"override_release", std::string(to_string(config.policy.release))},
      {"rounds", config.rounds},
      {"walks", config.walk.walks_per_round},
      {"steps_per_walk", config.walk.steps_per_walk},
      {"start", {config.walk.start.x, config.walk.start.y}},
      {"seed", config.seed},
      {"rng", "mt19937_64; round seed = splitmix64(seed ^ splitmix64(round + 1)); direction = draw >> 62 (N,S,E,W)"},
  };
}

}  // namespace handoff
