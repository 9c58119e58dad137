// fabench: batch experiment runner for the firefly optimizer library.
//
//   fabench run               execute an experiment config
//   fabench sweep             cross-product over listed parameter values
//   fabench plot-data         emit plain columnar series from logged artifacts
//   fabench verify-reductions drive the special-case equivalence reports
//   fabench list-benchmarks   show the available objectives
//
// Exit code 0 on success; on failure a machine-readable error record is
// printed to stderr and the exit code is nonzero.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "firefly/benchmarks.hpp"
#include "firefly/experiment.hpp"
#include "firefly/reductions.hpp"

namespace {

using firefly::experiment::ExperimentConfig;

struct RunFlags {
  std::string config_path;
  std::vector<std::string> overrides;  // key=value pairs collected from flags
  std::string output_dir;
};

void add_override(std::vector<std::string>& overrides, const std::string& key,
                  const std::string& value) {
  overrides.push_back(key + "=" + value);
}

// Flags win over file values: the file is loaded first, then each flag is
// replayed through the same key = value channel.
ExperimentConfig build_config(const RunFlags& flags) {
  ExperimentConfig config;
  if (!flags.config_path.empty())
    config = firefly::experiment::load_config_file(flags.config_path);
  for (const std::string& pair : flags.overrides) {
    const auto eq = pair.find('=');
    firefly::experiment::apply_config_line(config, pair.substr(0, eq), pair.substr(eq + 1));
  }
  if (!flags.output_dir.empty()) config.output_dir = flags.output_dir;
  return config;
}

void attach_param_flags(CLI::App* cmd, RunFlags& flags) {
  auto forward = [&flags](const std::string& key) {
    return [&flags, key](const std::string& value) { add_override(flags.overrides, key, value); };
  };
  cmd->add_option("--config", flags.config_path, "experiment config file (key = value lines)");
  cmd->add_option_function<std::string>("--benchmark", forward("benchmark"), "objective name");
  cmd->add_option_function<std::string>("--dim", forward("dimension"), "problem dimension");
  cmd->add_option_function<std::string>("--population", forward("population"), "swarm size n");
  cmd->add_option_function<std::string>("--generations", forward("generations"),
                                        "generation budget");
  cmd->add_option_function<std::string>("--alpha0", forward("alpha0"), "initial randomness");
  cmd->add_option_function<std::string>("--theta", forward("theta"), "alpha reduction factor");
  cmd->add_option_function<std::string>("--beta0", forward("beta0"), "attractiveness at r=0");
  cmd->add_option_function<std::string>("--gamma", forward("gamma"),
                                        "absorption coefficient, or 'auto'");
  cmd->add_option_function<std::string>("--seeds", forward("seeds"), "comma-separated seed list");
  cmd->add_option_function<std::string>("--seed-count", forward("seed_count"),
                                        "run seeds 1..N");
  cmd->add_option_function<std::string>("--snapshot-every", forward("snapshot_every"),
                                        "subswarm snapshot period (0 = off)");
  cmd->add_option_function<std::string>("--mode-coverage", forward("mode_coverage"),
                                        "true/false: mode coverage at end");
  cmd->add_option_function<std::string>("--coverage-tol", forward("coverage_tol"),
                                        "capture tolerance, or 'auto'");
  cmd->add_option_function<std::string>("--target-fitness", forward("target_fitness"),
                                        "stop once best <= target, or 'none'");
  cmd->add_option_function<std::string>("--max-evals", forward("max_evaluations"),
                                        "evaluation budget, or 'none'");
  cmd->add_option("--out", flags.output_dir, "output directory");
}

void print_warnings(const ExperimentConfig& config) {
  // Re-resolve gamma the same way run_experiment will, purely for warnings.
  firefly::FaParams params = config.params;
  if (config.gamma_auto && !config.benchmark.empty()) {
    try {
      params.gamma = firefly::estimate_gamma(
          firefly::benchmarks::make_benchmark(config.benchmark, config.dimension));
    } catch (const std::exception&) {
      return;  // resolution errors surface later with full context
    }
  }
  for (const std::string& warning : firefly::validate(params))
    std::cerr << "warning: " << warning << "\n";
}

int cmd_run(const RunFlags& flags) {
  const ExperimentConfig config = build_config(flags);
  print_warnings(config);
  const auto result = firefly::experiment::run_experiment(config);
  std::size_t failed = 0;
  for (const auto& outcome : result.outcomes) {
    if (outcome.failed) {
      ++failed;
      std::cerr << "seed " << outcome.seed << " failed: " << outcome.error << "\n";
    }
  }
  std::cout << "wrote " << result.outcomes.size() - failed << "/" << result.outcomes.size()
            << " runs to " << result.output_dir << " (gamma=" << result.resolved_gamma
            << ", best median=" << result.best_median << ")\n";
  return failed > 0 ? 1 : 0;
}

int cmd_verify_reductions(std::size_t steps, std::size_t population,
                          const std::vector<std::uint64_t>& seeds,
                          const std::string& out_path) {
  using firefly::reductions::Variant;
  const firefly::Problem problem = firefly::benchmarks::make_benchmark("sphere", 2);

  struct Case {
    Variant variant;
    firefly::FaParams params;
    bool expect_identity;
  };
  const firefly::FaParams de{.alpha0 = 0.0, .theta = 0.97, .beta0 = 0.5, .gamma = 0.0};
  const firefly::FaParams sa{.alpha0 = 0.5, .theta = 0.95, .beta0 = 0.0, .gamma = 1.0};
  const std::vector<Case> cases = {
      {Variant::de_like, de, true},
      {Variant::sa_like, sa, true},
      {Variant::apso, de, false},
      {Variant::hs_pitch, sa, false},
  };

  std::vector<firefly::reductions::EquivalenceReport> reports;
  bool all_as_expected = true;
  for (const Case& c : cases) {
    bool matched = true;
    for (std::uint64_t seed : seeds) {
      firefly::reductions::ReductionConfig config{c.variant, c.params, seed};
      config.params.population_size = population;
      const auto report = firefly::reductions::verify_reduction(config, problem, steps);
      reports.push_back(report);
      if (report.pass != c.expect_identity) matched = false;
    }
    const char* name = firefly::reductions::variant_name(c.variant);
    if (c.expect_identity) {
      std::cout << (matched ? "PASS" : "FAIL") << "  " << name
                << "  (exact identity over " << seeds.size() << " seeds, " << steps
                << " steps)\n";
    } else {
      std::cout << (matched ? "PASS" : "FAIL") << "  " << name
                << "  (substitution, engine trajectories expected to diverge)\n";
    }
    if (!matched) all_as_expected = false;
  }
  if (!out_path.empty()) {
    firefly::experiment::write_equivalence_reports(reports, out_path);
    std::cout << "reports written to " << out_path << "\n";
  }
  return all_as_expected ? 0 : 1;
}

int cmd_list_benchmarks() {
  for (const auto& info : firefly::benchmarks::benchmark_catalog()) {
    std::printf("%-11s  dim=%-4s  optimum=%-4g  modes=%zu  %s\n", info.name.c_str(),
                info.fixed_dimension == 0 ? "any" : std::to_string(info.fixed_dimension).c_str(),
                info.optimum, info.mode_count, info.summary.c_str());
  }
  return 0;
}

nlohmann::ordered_json error_record(const std::string& command, const std::string& message) {
  nlohmann::ordered_json j;
  j["error"]["command"] = command;
  j["error"]["message"] = message;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"firefly algorithm benchmark harness"};
  app.require_subcommand(1);

  RunFlags run_flags;
  CLI::App* run_cmd = app.add_subcommand("run", "execute an experiment config");
  attach_param_flags(run_cmd, run_flags);

  RunFlags sweep_flags;
  std::vector<std::string> sweep_specs;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "cross-product over listed parameter values");
  attach_param_flags(sweep_cmd, sweep_flags);
  sweep_cmd->add_option("--param", sweep_specs,
                        "sweep spec name=v1,v2,... (repeatable; crossed in order)");

  std::string plot_from, plot_kind, plot_out;
  CLI::App* plot_cmd = app.add_subcommand("plot-data", "emit plot-ready series files");
  plot_cmd->add_option("--from", plot_from, "experiment or sweep output directory")->required();
  plot_cmd->add_option("--kind", plot_kind, "convergence | swarm_scatter | gamma_sweep")
      ->required();
  plot_cmd->add_option("--out", plot_out, "directory for series files")->required();

  std::size_t vr_steps = 10, vr_population = 5;
  std::string vr_seeds = "1,2,3,4,5", vr_out;
  CLI::App* vr_cmd =
      app.add_subcommand("verify-reductions", "check the special-case equivalences");
  vr_cmd->add_option("--steps", vr_steps, "generations to compare");
  vr_cmd->add_option("--population", vr_population, "swarm size");
  vr_cmd->add_option("--seeds", vr_seeds, "comma-separated seed list");
  vr_cmd->add_option("--out", vr_out, "write equivalence reports to this JSON file");

  CLI::App* list_cmd = app.add_subcommand("list-benchmarks", "show available objectives");

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (run_cmd->parsed()) return cmd_run(run_flags);
    if (sweep_cmd->parsed()) {
      std::vector<firefly::experiment::SweepParam> sweep;
      for (const std::string& spec : sweep_specs) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos)
          throw std::invalid_argument("bad --param spec (want name=v1,v2,...): " + spec);
        firefly::experiment::SweepParam param;
        param.name = spec.substr(0, eq);
        std::stringstream ss(spec.substr(eq + 1));
        std::string value;
        while (std::getline(ss, value, ',')) param.values.push_back(value);
        sweep.push_back(std::move(param));
      }
      ExperimentConfig base = build_config(sweep_flags);
      const std::string out_root = base.output_dir;
      firefly::experiment::run_sweep(base, sweep, out_root);
      std::cout << "sweep written to " << out_root << "\n";
      return 0;
    }
    if (plot_cmd->parsed()) {
      firefly::experiment::emit_plot_data(plot_from, plot_kind, plot_out);
      std::cout << "series written to " << plot_out << "\n";
      return 0;
    }
    if (vr_cmd->parsed()) {
      std::vector<std::uint64_t> seeds;
      std::stringstream ss(vr_seeds);
      std::string item;
      while (std::getline(ss, item, ',')) seeds.push_back(std::stoull(item));
      return cmd_verify_reductions(vr_steps, vr_population, seeds, vr_out);
    }
    if (list_cmd->parsed()) return cmd_list_benchmarks();
  } catch (const std::exception& e) {
    std::cerr << error_record(command, e.what()).dump() << "\n";
    return 1;
  }
  return 1;
}
