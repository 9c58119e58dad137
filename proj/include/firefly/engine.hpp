#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "firefly/params.hpp"
#include "firefly/problem.hpp"
#include "firefly/rng.hpp"

namespace firefly {

struct Firefly {
  Vector position;
  double brightness = 0.0;  // cached objective value, lower is brighter
};

struct Population {
  std::vector<Firefly> fireflies;
  std::size_t generation = 0;
  // Reporting only: the update rule never reads the best-so-far record.
  Vector best_position;
  double best_fitness = 0.0;
};

// beta0 * exp(-gamma * r^2): strictly decreasing in r for gamma > 0,
// constant beta0 for gamma = 0.
double attractiveness(double beta0, double gamma, double r);

// alpha0 * theta^t by iterated multiplication, so that
// alpha_schedule(a, th, t + 1) == th * alpha_schedule(a, th, t) holds exactly.
double alpha_schedule(double alpha0, double theta, std::size_t t);

// gamma = 1 / L^2 where L is the arithmetic mean of the per-dimension widths.
double estimate_gamma(const Problem& problem);

// One move of firefly i toward a brighter firefly j:
//   clamp(xi + beta(r) * (xj - xi) + alpha_t * width_d * eps_d)
// r is the Euclidean distance between the inputs, eps is standard normal
// drawn in dimension order (D draws), width_d scales the perturbation to the
// domain. The expression order (attraction added before noise) is fixed;
// the reduction equivalence checks rely on it being bit-stable.
Vector move_firefly(const Vector& xi, const Vector& xj, const FaParams& params,
                    double alpha_t, RngStream& rng, const Problem& problem);

// Uniform positions in bounds, n * dimension uniform draws in firefly-major
// dimension-minor order, one evaluation per firefly.
Population initialize_population(const Problem& problem, std::size_t n,
                                 RngStream& rng, Evaluator& eval);

// One asynchronous generation:
//   - brightness is snapshotted at generation start; comparisons use the
//     snapshot, as does the position of the target j,
//   - mover i advances in place through its inner loop,
//   - each firefly is re-evaluated exactly once at inner-loop end and the new
//     position is kept only if not worse than its start-of-generation fitness,
//   - ties in brightness trigger no movement, so the brightest firefly stays.
// Exactly n evaluations per call.
void step_generation(Population& pop, const Problem& problem,
                     const FaParams& params, RngStream& rng, Evaluator& eval);

struct GenerationStats {
  std::size_t generation = 0;
  double best = 0.0;   // best-so-far, non-increasing
  double mean = 0.0;   // population mean fitness
  double worst = 0.0;  // population worst fitness
  double alpha = 0.0;  // randomness strength scheduled at this generation
  std::uint64_t evaluations = 0;
};

struct RunResult {
  Vector best_position;
  double best_fitness = 0.0;
  std::vector<GenerationStats> history;  // generation 0 included
  std::uint64_t evaluations = 0;
  std::uint64_t seed = 0;
  FaParams params;
  std::string boundary_handling = "clamp";
  std::string termination_reason;  // max_generations | target_fitness |
                                   // evaluation_budget
  Population final_population;
};

using GenerationObserver = std::function<void(const Population&)>;

// Full run of the generation loop. Deterministic: identical
// (problem, params, seed, termination) yields an identical RunResult.
// The observer, if set, is called after initialization and after every
// generation; it must not mutate anything the run reads.
RunResult run(const Problem& problem, const FaParams& params,
              std::uint64_t seed, const Termination& termination = {},
              const GenerationObserver& observer = nullptr);

}  // namespace firefly
