// Experiment runner: seeded batch runs over one benchmark, structured logs,
// plot-ready series. Artifact layout under output_dir:
//
//   seed_<s>.csv            convergence history, '#' config header, then
//                           `generation,best,mean,worst,alpha,evaluations`
//   seed_<s>.snapshots.csv  per-snapshot firefly coordinates + cluster ids
//   seed_<s>.json           per-run summary record
//   summary.json            cross-seed aggregate + resolved config
//
// Every file embeds the fully resolved config (auto-filled gamma and
// tolerance included) and its seed, and all content is deterministic, so a
// rerun of the same config reproduces each artifact byte for byte.

#include "firefly/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "firefly/benchmarks.hpp"
#include "firefly/diagnostics.hpp"

namespace firefly::experiment {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config key '" + key + "': not a number: '" + value + "'");
  }
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config key '" + key + "': not a nonnegative integer: '" +
                                value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw std::invalid_argument("config key '" + key + "': expected true/false: '" + value + "'");
}

std::vector<std::uint64_t> parse_seed_list(const std::string& value) {
  std::vector<std::uint64_t> seeds;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    seeds.push_back(parse_uint("seeds", item));
  }
  if (seeds.empty()) throw std::invalid_argument("config key 'seeds': empty list");
  return seeds;
}

}  // namespace

void apply_config_line(ExperimentConfig& config, const std::string& key,
                       const std::string& value) {
  if (key == "benchmark") {
    config.benchmark = value;
  } else if (key == "dimension") {
    config.dimension = static_cast<std::size_t>(parse_uint(key, value));
  } else if (key == "population") {
    config.params.population_size = static_cast<std::size_t>(parse_uint(key, value));
  } else if (key == "generations") {
    config.params.max_generations = static_cast<std::size_t>(parse_uint(key, value));
  } else if (key == "alpha0") {
    config.params.alpha0 = parse_double(key, value);
  } else if (key == "theta") {
    config.params.theta = parse_double(key, value);
  } else if (key == "beta0") {
    config.params.beta0 = parse_double(key, value);
  } else if (key == "gamma") {
    if (value == "auto") {
      config.gamma_auto = true;
    } else {
      config.params.gamma = parse_double(key, value);
      config.gamma_auto = false;
    }
  } else if (key == "seeds") {
    config.seeds = parse_seed_list(value);
  } else if (key == "seed_count") {
    const std::uint64_t count = parse_uint(key, value);
    if (count == 0) throw std::invalid_argument("seed_count must be positive");
    config.seeds.clear();
    for (std::uint64_t s = 1; s <= count; ++s) config.seeds.push_back(s);
  } else if (key == "target_fitness") {
    if (value == "none")
      config.target_fitness.reset();
    else
      config.target_fitness = parse_double(key, value);
  } else if (key == "max_evaluations") {
    if (value == "none")
      config.max_evaluations.reset();
    else
      config.max_evaluations = parse_uint(key, value);
  } else if (key == "snapshot_every") {
    config.snapshot_every = static_cast<std::size_t>(parse_uint(key, value));
  } else if (key == "mode_coverage") {
    config.mode_coverage = parse_bool(key, value);
  } else if (key == "coverage_tol") {
    if (value == "auto")
      config.coverage_tol.reset();
    else
      config.coverage_tol = parse_double(key, value);
  } else if (key == "output_dir") {
    config.output_dir = value;
  } else {
    throw std::invalid_argument("unknown config key: '" + key + "'");
  }
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  ExperimentConfig config;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                  ": expected 'key = value'");
    try {
      apply_config_line(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return config;
}

namespace {

struct Resolved {
  ExperimentConfig config;
  Problem problem;
  FaParams params;  // gamma filled in
  double coverage_tol = 0.0;
  Termination termination;
};

Resolved resolve(const ExperimentConfig& config) {
  if (config.benchmark.empty()) throw std::invalid_argument("config: benchmark is required");
  if (config.output_dir.empty()) throw std::invalid_argument("config: output_dir is required");
  Resolved r{config, benchmarks::make_benchmark(config.benchmark, config.dimension),
             config.params, 0.0, {}};
  if (config.gamma_auto) r.params.gamma = estimate_gamma(r.problem);
  validate(r.params);
  r.coverage_tol = config.coverage_tol ? *config.coverage_tol
                                       : diagnostics::default_capture_tolerance(r.problem);
  if (!(r.coverage_tol > 0.0))
    throw std::invalid_argument("config: coverage_tol must be positive");
  if (config.mode_coverage && r.problem.known_modes.empty())
    throw std::invalid_argument("config: mode_coverage requested but benchmark '" +
                                config.benchmark + "' lists no known modes");
  r.termination.target_fitness = config.target_fitness;
  r.termination.max_evaluations = config.max_evaluations;
  return r;
}

std::vector<std::pair<std::string, std::string>> config_echo(const Resolved& r) {
  const ExperimentConfig& c = r.config;
  std::vector<std::pair<std::string, std::string>> lines;
  lines.emplace_back("benchmark", c.benchmark);
  lines.emplace_back("dimension", std::to_string(c.dimension));
  lines.emplace_back("population", std::to_string(r.params.population_size));
  lines.emplace_back("generations", std::to_string(r.params.max_generations));
  lines.emplace_back("alpha0", fmt_double(r.params.alpha0));
  lines.emplace_back("theta", fmt_double(r.params.theta));
  lines.emplace_back("beta0", fmt_double(r.params.beta0));
  lines.emplace_back("gamma", fmt_double(r.params.gamma));
  lines.emplace_back("gamma_auto", c.gamma_auto ? "true" : "false");
  lines.emplace_back("boundary_handling", "clamp");
  lines.emplace_back("target_fitness",
                     c.target_fitness ? fmt_double(*c.target_fitness) : "none");
  lines.emplace_back("max_evaluations",
                     c.max_evaluations ? std::to_string(*c.max_evaluations) : "none");
  lines.emplace_back("snapshot_every", std::to_string(c.snapshot_every));
  lines.emplace_back("mode_coverage", c.mode_coverage ? "true" : "false");
  lines.emplace_back("coverage_tol", fmt_double(r.coverage_tol));
  return lines;
}

void write_echo(std::ofstream& out, const Resolved& r) {
  for (const auto& [key, value] : config_echo(r)) out << "# " << key << " = " << value << "\n";
}

ordered_json config_json(const Resolved& r) {
  ordered_json j;
  for (const auto& [key, value] : config_echo(r)) j[key] = value;
  ordered_json seeds = ordered_json::array();
  for (std::uint64_t s : r.config.seeds) seeds.push_back(s);
  j["seeds"] = seeds;
  return j;
}

struct Snapshot {
  std::size_t generation = 0;
  std::vector<Vector> positions;
  std::vector<std::size_t> cluster_of;
};

Snapshot take_snapshot(const Population& pop, double radius) {
  Snapshot snap;
  snap.generation = pop.generation;
  for (const Firefly& f : pop.fireflies) snap.positions.push_back(f.position);
  snap.cluster_of =
      diagnostics::detect_subswarms(pop, DistanceMetric::euclidean(), radius).cluster_of;
  return snap;
}

void write_convergence_csv(const fs::path& path, const Resolved& r,
                           std::uint64_t seed, const RunResult& result) {
  std::ofstream out(path, std::ios::trunc);
  write_echo(out, r);
  out << "# seed = " << seed << "\n";
  out << "generation,best,mean,worst,alpha,evaluations\n";
  for (const GenerationStats& row : result.history) {
    out << row.generation << ',' << fmt_double(row.best) << ',' << fmt_double(row.mean)
        << ',' << fmt_double(row.worst) << ',' << fmt_double(row.alpha) << ','
        << row.evaluations << "\n";
  }
}

void write_snapshots_csv(const fs::path& path, const Resolved& r, std::uint64_t seed,
                         const std::vector<Snapshot>& snapshots) {
  std::ofstream out(path, std::ios::trunc);
  write_echo(out, r);
  out << "# seed = " << seed << "\n";
  out << "generation,firefly,cluster";
  for (std::size_t d = 0; d < r.problem.dimension; ++d) out << ",x" << d;
  out << "\n";
  for (const Snapshot& snap : snapshots) {
    for (std::size_t i = 0; i < snap.positions.size(); ++i) {
      out << snap.generation << ',' << i << ',' << snap.cluster_of[i];
      for (double v : snap.positions[i]) out << ',' << fmt_double(v);
      out << "\n";
    }
  }
}

ordered_json mode_coverage_json(const diagnostics::ModeCoverage& coverage) {
  ordered_json j;
  j["tolerance"] = coverage.tolerance;
  j["coverage"] = coverage.coverage;
  j["captured"] = coverage.captured_count;
  ordered_json modes = ordered_json::array();
  for (const auto& m : coverage.modes) {
    ordered_json entry;
    entry["mode"] = m.mode;
    entry["nearest_distance"] = m.nearest_distance;
    entry["nearest_index"] = m.nearest_index;
    entry["captured"] = m.captured;
    modes.push_back(entry);
  }
  j["modes"] = modes;
  return j;
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  const Resolved r = resolve(config);

  fs::create_directories(r.config.output_dir);
  {
    const fs::path probe = fs::path(r.config.output_dir) / ".write_probe";
    std::ofstream test(probe, std::ios::trunc);
    if (!test) throw std::runtime_error("output directory not writable: " + r.config.output_dir);
    test.close();
    fs::remove(probe);
  }

  const double radius = diagnostics::influence_radius(r.params.gamma);

  ExperimentResult result;
  result.output_dir = r.config.output_dir;
  result.resolved_gamma = r.params.gamma;
  result.resolved_coverage_tol = r.coverage_tol;

  ordered_json runs_json = ordered_json::array();

  for (std::uint64_t seed : r.config.seeds) {
    SeedOutcome outcome;
    outcome.seed = seed;
    try {
      std::vector<Snapshot> snapshots;
      GenerationObserver observer = nullptr;
      if (r.config.snapshot_every > 0) {
        observer = [&](const Population& pop) {
          if (pop.generation % r.config.snapshot_every == 0)
            snapshots.push_back(take_snapshot(pop, radius));
        };
      }
      const RunResult run_result = run(r.problem, r.params, seed, r.termination, observer);
      if (r.config.snapshot_every > 0 &&
          (snapshots.empty() ||
           snapshots.back().generation != run_result.final_population.generation))
        snapshots.push_back(take_snapshot(run_result.final_population, radius));

      const auto subswarms = diagnostics::detect_subswarms(
          run_result.final_population, DistanceMetric::euclidean(), radius);

      outcome.best_fitness = run_result.best_fitness;
      outcome.evaluations = run_result.evaluations;
      outcome.final_cluster_count = subswarms.cluster_count;

      const std::string stem = "seed_" + std::to_string(seed);
      write_convergence_csv(fs::path(r.config.output_dir) / (stem + ".csv"), r, seed,
                            run_result);
      if (r.config.snapshot_every > 0)
        write_snapshots_csv(fs::path(r.config.output_dir) / (stem + ".snapshots.csv"), r,
                            seed, snapshots);

      ordered_json j;
      j["seed"] = seed;
      j["best_fitness"] = run_result.best_fitness;
      j["best_position"] = run_result.best_position;
      j["evaluations"] = run_result.evaluations;
      j["generations_completed"] = run_result.final_population.generation;
      j["termination"] = run_result.termination_reason;
      j["final_cluster_count"] = subswarms.cluster_count;
      j["influence_radius"] = diagnostics::is_global_visibility(radius)
                                  ? ordered_json("infinity")
                                  : ordered_json(radius);
      if (r.config.mode_coverage) {
        const auto coverage =
            diagnostics::mode_coverage(run_result.final_population, r.problem, r.coverage_tol);
        outcome.coverage = coverage.coverage;
        j["mode_coverage"] = mode_coverage_json(coverage);
      }
      j["config"] = config_json(r);
      std::ofstream out(fs::path(r.config.output_dir) / (stem + ".json"), std::ios::trunc);
      out << j.dump(2) << "\n";
    } catch (const std::exception& e) {
      outcome.failed = true;
      outcome.error = e.what();
    }
    runs_json.push_back([&outcome]() {
      ordered_json j;
      j["seed"] = outcome.seed;
      if (outcome.failed) {
        j["failed"] = true;
        j["error"] = outcome.error;
      } else {
        j["best_fitness"] = outcome.best_fitness;
        j["evaluations"] = outcome.evaluations;
        j["final_cluster_count"] = outcome.final_cluster_count;
        if (outcome.coverage) j["coverage"] = *outcome.coverage;
      }
      return j;
    }());
    result.outcomes.push_back(std::move(outcome));
  }

  std::vector<double> best_values, cluster_counts;
  std::size_t covered_runs = 0, coverage_runs = 0, failures = 0;
  for (const SeedOutcome& o : result.outcomes) {
    if (o.failed) {
      ++failures;
      continue;
    }
    best_values.push_back(o.best_fitness);
    cluster_counts.push_back(static_cast<double>(o.final_cluster_count));
    if (o.coverage) {
      ++coverage_runs;
      if (*o.coverage == 1.0) ++covered_runs;
    }
  }
  if (!best_values.empty()) {
    result.best_min = *std::min_element(best_values.begin(), best_values.end());
    result.best_max = *std::max_element(best_values.begin(), best_values.end());
    result.best_median = median(best_values);
    result.median_final_cluster_count = median(cluster_counts);
  }
  if (coverage_runs > 0)
    result.coverage_success_rate =
        static_cast<double>(covered_runs) / static_cast<double>(coverage_runs);

  ordered_json summary;
  summary["config"] = config_json(r);
  summary["runs"] = runs_json;
  ordered_json aggregate;
  aggregate["completed"] = best_values.size();
  aggregate["failures"] = failures;
  aggregate["best_min"] = result.best_min;
  aggregate["best_median"] = result.best_median;
  aggregate["best_max"] = result.best_max;
  aggregate["median_final_cluster_count"] = result.median_final_cluster_count;
  if (result.coverage_success_rate)
    aggregate["coverage_success_rate"] = *result.coverage_success_rate;
  summary["aggregate"] = aggregate;
  std::ofstream out(fs::path(r.config.output_dir) / "summary.json", std::ios::trunc);
  out << summary.dump(2) << "\n";

  return result;
}

namespace {

ordered_json read_json_file(const fs::path& path, const std::string& what) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing " + what + ": " + path.string());
  ordered_json j;
  in >> j;
  return j;
}

std::vector<std::string> read_lines(const fs::path& path, const std::string& what) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing " + what + ": " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

std::vector<std::uint64_t> seeds_from_summary(const fs::path& dir) {
  const ordered_json summary = read_json_file(dir / "summary.json", "experiment summary");
  std::vector<std::uint64_t> seeds;
  for (const auto& s : summary.at("config").at("seeds")) seeds.push_back(s.get<std::uint64_t>());
  return seeds;
}

}  // namespace

void emit_plot_data(const std::string& artifacts_dir, const std::string& kind,
                    const std::string& out_dir) {
  const fs::path from(artifacts_dir);
  fs::create_directories(out_dir);

  if (kind == "convergence") {
    for (std::uint64_t seed : seeds_from_summary(from)) {
      const auto lines =
          read_lines(from / ("seed_" + std::to_string(seed) + ".csv"), "convergence log");
      std::ofstream out(fs::path(out_dir) / ("convergence_seed" + std::to_string(seed) + ".dat"),
                        std::ios::trunc);
      bool header_seen = false;
      for (const std::string& line : lines) {
        if (line.empty()) continue;
        if (line[0] == '#') {
          out << line << "\n";
          continue;
        }
        if (!header_seen) {  // column header row
          header_seen = true;
          out << "# columns: generation best mean\n";
          continue;
        }
        const auto cols = split(line, ',');
        out << cols.at(0) << ' ' << cols.at(1) << ' ' << cols.at(2) << "\n";
      }
    }
    return;
  }

  if (kind == "swarm_scatter") {
    for (std::uint64_t seed : seeds_from_summary(from)) {
      const fs::path src = from / ("seed_" + std::to_string(seed) + ".snapshots.csv");
      if (!fs::exists(src))
        throw std::runtime_error("swarm_scatter requested but no snapshots were logged: " +
                                 src.string());
      const auto lines = read_lines(src, "snapshot log");
      std::ofstream out(fs::path(out_dir) / ("scatter_seed" + std::to_string(seed) + ".dat"),
                        std::ios::trunc);
      bool header_seen = false;
      std::string current_generation;
      for (const std::string& line : lines) {
        if (line.empty()) continue;
        if (line[0] == '#') {
          out << line << "\n";
          continue;
        }
        if (!header_seen) {
          header_seen = true;
          out << "# columns: x... cluster\n";
          continue;
        }
        const auto cols = split(line, ',');
        if (cols.at(0) != current_generation) {  // new snapshot block
          if (!current_generation.empty()) out << "\n";
          current_generation = cols.at(0);
          out << "# generation = " << current_generation << "\n";
        }
        for (std::size_t c = 3; c < cols.size(); ++c) out << cols[c] << ' ';
        out << cols.at(2) << "\n";
      }
    }
    return;
  }

  if (kind == "gamma_sweep") {
    const fs::path index_path = from / "sweep.json";
    if (!fs::exists(index_path))
      throw std::runtime_error("gamma_sweep requires a sweep root (no sweep.json in " +
                               from.string() + ")");
    const ordered_json index = read_json_file(index_path, "sweep index");
    std::vector<std::pair<double, double>> rows;
    for (const auto& combo : index.at("combos")) {
      if (!combo.at("params").contains("gamma"))
        throw std::runtime_error("gamma_sweep requires a sweep over gamma");
      const double gamma = std::stod(combo.at("params").at("gamma").get<std::string>());
      const ordered_json summary =
          read_json_file(from / combo.at("dir").get<std::string>() / "summary.json",
                         "experiment summary");
      rows.emplace_back(gamma,
                        summary.at("aggregate").at("median_final_cluster_count").get<double>());
    }
    std::sort(rows.begin(), rows.end());
    std::ofstream out(fs::path(out_dir) / "gamma_sweep.dat", std::ios::trunc);
    out << "# columns: gamma median_final_cluster_count\n";
    for (const auto& [gamma, clusters] : rows)
      out << fmt_double(gamma) << ' ' << fmt_double(clusters) << "\n";
    return;
  }

  throw std::runtime_error("unknown plot kind: " + kind);
}

void run_sweep(const ExperimentConfig& base, const std::vector<SweepParam>& sweep,
               const std::string& out_root) {
  if (sweep.empty()) throw std::invalid_argument("sweep requires at least one parameter");
  for (const SweepParam& p : sweep)
    if (p.values.empty())
      throw std::invalid_argument("sweep parameter '" + p.name + "' has no values");

  fs::create_directories(out_root);

  ordered_json combos = ordered_json::array();
  std::vector<std::size_t> index(sweep.size(), 0);
  while (true) {
    ExperimentConfig config = base;
    std::string dir_name;
    ordered_json combo_params;
    for (std::size_t p = 0; p < sweep.size(); ++p) {
      const std::string& value = sweep[p].values[index[p]];
      apply_config_line(config, sweep[p].name, value);
      if (!dir_name.empty()) dir_name += "_";
      dir_name += sweep[p].name + "=" + value;
      combo_params[sweep[p].name] = value;
    }
    config.output_dir = (fs::path(out_root) / dir_name).string();
    run_experiment(config);

    ordered_json combo;
    combo["params"] = combo_params;
    combo["dir"] = dir_name;
    combos.push_back(combo);

    std::size_t p = sweep.size();
    while (p > 0) {
      --p;
      if (++index[p] < sweep[p].values.size()) break;
      index[p] = 0;
      if (p == 0) {
        ordered_json out;
        out["combos"] = combos;
        std::ofstream f(fs::path(out_root) / "sweep.json", std::ios::trunc);
        f << out.dump(2) << "\n";
        return;
      }
    }
  }
}

std::string equivalence_report_json(const reductions::EquivalenceReport& report) {
  ordered_json j;
  j["variant"] = reductions::variant_name(report.variant);
  j["seed"] = report.seed;
  j["population"] = report.population_size;
  j["steps"] = report.max_abs_difference.size();
  j["max_abs_difference"] = report.max_abs_difference;
  j["pass"] = report.pass;
  return j.dump(2);
}

void write_equivalence_reports(const std::vector<reductions::EquivalenceReport>& reports,
                               const std::string& out_path) {
  ordered_json all = ordered_json::array();
  for (const auto& report : reports)
    all.push_back(ordered_json::parse(equivalence_report_json(report)));
  fs::create_directories(fs::path(out_path).parent_path().empty()
                             ? fs::path(".")
                             : fs::path(out_path).parent_path());
  std::ofstream out(out_path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << all.dump(2) << "\n";
}

}  // namespace firefly::experiment
