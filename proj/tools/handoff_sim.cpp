// handoff-sim: Monte Carlo driver for mobile-controlled handoff with
// transition learning.
//
// Exit codes: 0 success, 1 configuration or I/O error, 2 oracle failure.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "handoff/analysis.hpp"
#include "handoff/environment.hpp"
#include "handoff/report.hpp"
#include "handoff/scenario_io.hpp"
#include "handoff/simulation.hpp"

namespace fs = std::filesystem;
using namespace handoff;

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitOracle = 2;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string scenario{"default"};
  std::string config_file;
  std::string policy{"both"};
  std::string release{"rank_order_change"};
  int rounds{1000};
  int walks{2000};
  int steps{10};
  std::uint64_t seed{kDefaultSeed};
  unsigned threads{0};
  std::string output_dir{"out"};
};

void add_scenario_options(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--scenario", o.scenario, "Preset scenario: default | sector_load")
      ->capture_default_str();
  cmd->add_option("--config-file", o.config_file, "JSON scenario file (overrides --scenario)");
}

void add_walk_options(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--rounds", o.rounds, "Monte Carlo rounds")->capture_default_str();
  cmd->add_option("--walks", o.walks, "Random walks per round")->capture_default_str();
  cmd->add_option("--steps-per-walk", o.steps, "Unit steps per walk")->capture_default_str();
  cmd->add_option("--seed", o.seed, "Master seed")->capture_default_str();
  cmd->add_option("--override-release", o.release,
                  "When a retained station is released: rank_order_change | new_state")
      ->capture_default_str();
  cmd->add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)");
}

struct Resolved {
  Environment env;
  std::string label;
};

Resolved resolve_environment(const CommonOptions& o) {
  try {
    if (!o.config_file.empty()) {
      auto file = load_scenario_file(o.config_file);
      return {build_scenario(file.config), file.name};
    }
    return {build_scenario(o.scenario), o.scenario};
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
}

SimulationConfig make_config(const CommonOptions& o, const std::string& label, PolicyKind kind) {
  SimulationConfig c;
  c.scenario = label;
  c.walk.steps_per_walk = o.steps;
  c.walk.walks_per_round = o.walks;
  c.rounds = o.rounds;
  c.seed = o.seed;
  c.threads = o.threads;
  c.policy.kind = kind;
  try {
    c.policy.release = parse_override_release(o.release);
    c.validate();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  return c;
}

fs::path prepare_output_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw ConfigError("cannot create output directory '" + dir + "'");
  }
  return fs::path(dir);
}

template <class Writer>
void write_file(const fs::path& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write " + path.string());
  writer(out);
  out.flush();
  if (!out) throw ConfigError("failed writing " + path.string());
}

void print_summary(const SummaryReport& r, std::ostream& out) {
  auto line = [&](const PolicySummary& s, double gain) {
    out << std::left << std::setw(14) << r.config.scenario << std::setw(22) << to_string(s.policy)
        << std::right << std::setw(10) << format_fixed4(s.average_allocation) << std::setw(12)
        << format_fixed4(s.override_pct()) << std::setw(11) << format_fixed4(gain) << '\n';
  };
  line(r.baseline, 0.0);
  if (r.learning) line(*r.learning, r.performance_gain_pct());
}

void print_summary_header(std::ostream& out) {
  out << std::left << std::setw(14) << "scenario" << std::setw(22) << "policy" << std::right
      << std::setw(10) << "avg_alloc" << std::setw(12) << "override_%" << std::setw(11)
      << "gain_%" << '\n';
}

int cmd_run(const CommonOptions& o) {
  const auto [env, label] = resolve_environment(o);
  PolicyKind kind = PolicyKind::TransitionLearning;
  bool both = false;
  if (o.policy == "both") {
    both = true;
  } else {
    try {
      kind = parse_policy_kind(o.policy);
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
  }
  const SimulationConfig config = make_config(o, label, kind);
  const fs::path dir = prepare_output_dir(o.output_dir);

  const SummaryReport report = run_trial(env, config);

  write_file(dir / "summary.csv",
             [&](std::ostream& out) { write_summary_csv(report, both, out); });
  write_file(dir / "heatmap_avg.csv",
             [&](std::ostream& out) { write_grid_csv(report.primary().heatmap, out); });
  if (both) {
    write_file(dir / "heatmap_avg_baseline.csv",
               [&](std::ostream& out) { write_grid_csv(report.baseline.heatmap, out); });
  }
  write_file(dir / "visits.csv",
             [&](std::ostream& out) { write_grid_csv(report.primary().visits, out); });
  write_file(dir / "run_manifest.json", [&](std::ostream& out) {
    out << run_manifest(config, env, o.policy).dump(2) << '\n';
  });

  print_summary_header(std::cout);
  print_summary(report, std::cout);
  std::cout << "wrote " << dir.string() << "/{summary.csv,heatmap_avg.csv,visits.csv,run_manifest.json}\n";
  return 0;
}

int cmd_snapshot(const CommonOptions& o, int round_index) {
  const auto [env, label] = resolve_environment(o);
  PolicyKind kind;
  try {
    kind = parse_policy_kind(o.policy == "both" ? "transition_learning" : o.policy);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  const SimulationConfig config = make_config(o, label, kind);
  if (round_index < 0 || round_index >= config.rounds) {
    throw ConfigError("round index " + std::to_string(round_index) + " outside [0, " +
                      std::to_string(config.rounds) + ")");
  }
  const fs::path dir = prepare_output_dir(o.output_dir);
  const auto grid = snapshot_round(env, config, round_index);
  const fs::path path = dir / ("snapshot_round_" + std::to_string(round_index) + ".csv");
  write_file(path, [&](std::ostream& out) { write_grid_csv(grid, out); });
  std::cout << "wrote " << path.string() << '\n';
  return 0;
}

int cmd_validate(const CommonOptions& o, std::int64_t empirical_steps) {
  const auto [env, label] = resolve_environment(o);
  const auto checks = run_oracle_suite(env, empirical_steps, o.seed);
  bool ok = true;
  std::cout << "oracle report for scenario '" << label << "'\n";
  for (const auto& c : checks) {
    ok = ok && c.passed;
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) std::cout << " -- " << c.detail;
    std::cout << '\n';
  }
  return ok ? 0 : kExitOracle;
}

int cmd_compare(const CommonOptions& o) {
  std::optional<fs::path> dir;
  if (!o.output_dir.empty()) dir = prepare_output_dir(o.output_dir);
  std::ostringstream csv;
  bool header = true;
  print_summary_header(std::cout);
  for (const std::string name : {"default", "sector_load"}) {
    const auto env = build_scenario(name);
    const auto report = run_trial(env, make_config(o, name, PolicyKind::TransitionLearning));
    print_summary(report, std::cout);
    write_summary_csv(report, true, csv, header);
    header = false;
  }
  if (dir) {
    write_file(*dir / "compare.csv", [&](std::ostream& out) { out << csv.str(); });
    std::cout << "wrote " << (*dir / "compare.csv").string() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grid-world simulator for mobile-controlled handoff with transition learning"};
  app.require_subcommand(1);

  CommonOptions opts;
  int round_index = -1;
  std::int64_t empirical_steps = 10'000'000;

  auto* run = app.add_subcommand("run", "Run a Monte Carlo trial and write summary and heatmaps");
  add_scenario_options(run, opts);
  add_walk_options(run, opts);
  run->add_option("--policy", opts.policy, "rssi_default | transition_learning | both")
      ->capture_default_str();
  run->add_option("--output-dir", opts.output_dir, "Directory for output files")
      ->capture_default_str();

  auto* snap = app.add_subcommand("snapshot", "Write the per-cell allocation map of one round");
  add_scenario_options(snap, opts);
  add_walk_options(snap, opts);
  snap->add_option("--policy", opts.policy, "rssi_default | transition_learning");
  snap->add_option("--round", round_index, "Round index to replay")->required();
  snap->add_option("--output-dir", opts.output_dir, "Directory for output files")
      ->capture_default_str();

  auto* validate = app.add_subcommand("validate", "Run the Markov-chain and coverage oracles");
  add_scenario_options(validate, opts);
  validate->add_option("--seed", opts.seed, "Seed for the empirical walk")->capture_default_str();
  validate->add_option("--empirical-steps", empirical_steps, "Steps of the long empirical walk")
      ->capture_default_str();

  auto* compare = app.add_subcommand("compare", "Both presets under both policies, side by side");
  add_walk_options(compare, opts);
  compare->add_option("--output-dir", opts.output_dir, "Directory for compare.csv (empty: none)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*run) return cmd_run(opts);
    if (*snap) return cmd_snapshot(opts, round_index);
    if (*validate) return cmd_validate(opts, empirical_steps);
    if (*compare) return cmd_compare(opts);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return 0;
}
