#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "handoff/environment.hpp"
#include "handoff/simulation.hpp"

namespace handoff {

/// Fixed 4-decimal rendering used by every emitted number that is not a
/// count.
std::string format_fixed4(double value);

/// summary.csv: scenario,policy,avg_allocation,override_pct,
/// performance_gain_pct,rounds,walks,seed. The baseline row is written when
/// `include_baseline` is set; the learning row whenever the report has one.
void write_summary_csv(const SummaryReport& report, bool include_baseline, std::ostream& out,
                       bool header = true);

/// height rows of width comma-separated values, row 0 = y 0.
void write_grid_csv(const CellGrid<double>& grid, std::ostream& out);
void write_grid_csv(const CellGrid<long>& grid, std::ostream& out);

/// Everything needed to replay a run.
nlohmann::json run_manifest(const SimulationConfig& config, const Environment& env,
                            const std::string& policy_label);

}  // namespace handoff
