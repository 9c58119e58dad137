#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "firefly/engine.hpp"
#include "firefly/reductions.hpp"

namespace firefly::experiment {

// A fully specified batch experiment: one benchmark, one parameter set, many
// seeds. Loaded from a key = value config file, overridable flag by flag;
// the resolved form (auto-filled gamma and tolerance included) is echoed
// into every artifact so any output file is reproducible from its own header.
struct ExperimentConfig {
  std::string benchmark;
  std::size_t dimension = 2;
  FaParams params;
  bool gamma_auto = true;  // true until a gamma value is given explicitly
  std::vector<std::uint64_t> seeds = {1};
  std::optional<double> target_fitness;
  std::optional<std::uint64_t> max_evaluations;
  std::size_t snapshot_every = 0;  // 0 = no subswarm snapshots
  bool mode_coverage = false;
  std::optional<double> coverage_tol;  // unset = 1% of mean domain width
  std::string output_dir;
};

// Parses `key = value` lines ('#' starts a comment). Unknown keys are
// rejected. Throws std::invalid_argument with the offending line on error.
ExperimentConfig load_config_file(const std::string& path);
void apply_config_line(ExperimentConfig& config, const std::string& key,
                       const std::string& value);

struct SeedOutcome {
  std::uint64_t seed = 0;
  bool failed = false;
  std::string error;
  double best_fitness = 0.0;
  std::uint64_t evaluations = 0;
  std::size_t final_cluster_count = 0;
  std::optional<double> coverage;
};

struct ExperimentResult {
  std::string output_dir;
  double resolved_gamma = 0.0;
  double resolved_coverage_tol = 0.0;
  std::vector<SeedOutcome> outcomes;
  double best_min = 0.0, best_median = 0.0, best_max = 0.0;
  double median_final_cluster_count = 0.0;  // even seed counts can land on .5
  std::optional<double> coverage_success_rate;  // fraction of runs at 1.0
};

// Executes one run per seed and writes, under config.output_dir:
//   seed_<s>.csv            convergence history,
//                           header `generation,best,mean,worst,alpha,evaluations`
//   seed_<s>.json           structured per-run summary
//   seed_<s>.snapshots.csv  subswarm snapshots (when snapshot_every > 0)
//   summary.json            cross-seed aggregate
// All artifacts are deterministic: rerunning the same config reproduces them
// byte for byte. An unwritable output directory aborts before any run; a
// single run failure is recorded and the remaining seeds continue.
ExperimentResult run_experiment(const ExperimentConfig& config);

// Re-emits logged artifacts as plain columnar series for plotting:
//   convergence   generation vs best/mean, one file per seed
//   swarm_scatter per-snapshot firefly coordinates with cluster ids
//   gamma_sweep   gamma vs median final cluster count, from a sweep root
// Throws std::runtime_error when the requested kind is absent from the
// artifacts.
void emit_plot_data(const std::string& artifacts_dir, const std::string& kind,
                    const std::string& out_dir);

// Cross-product sweep: for every combination of the listed values (applied
// in the given order) runs the base config into out_root/<name=value[_...]>
// and writes an index to out_root/sweep.json.
struct SweepParam {
  std::string name;                 // gamma|alpha0|theta|beta0|population|generations
  std::vector<std::string> values;  // kept verbatim for directory naming
};
void run_sweep(const ExperimentConfig& base, const std::vector<SweepParam>& sweep,
               const std::string& out_root);

// Structured run-log serialization for reduction equivalence reports.
std::string equivalence_report_json(const reductions::EquivalenceReport& report);
void write_equivalence_reports(const std::vector<reductions::EquivalenceReport>& reports,
                               const std::string& out_path);

}  // namespace firefly::experiment
