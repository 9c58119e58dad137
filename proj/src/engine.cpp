#include "firefly/engine.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "firefly/distance.hpp"

namespace firefly {

double attractiveness(double beta0, double gamma, double r) {
  return beta0 * std::exp(-gamma * r * r);
}

double alpha_schedule(double alpha0, double theta, std::size_t t) {
  if (!(theta > 0.0 && theta < 1.0))
    throw std::invalid_argument("theta must lie strictly inside (0, 1)");
  // Iterated multiplication instead of pow(): the recurrence
  // alpha(t+1) = theta * alpha(t) then holds bit-exactly.
  double alpha = alpha0;
  for (std::size_t i = 0; i < t; ++i) alpha *= theta;
  return alpha;
}

double estimate_gamma(const Problem& problem) {
  const double mean_width = problem.mean_width();
  if (!(mean_width > 0.0))
    throw std::invalid_argument("estimate_gamma requires a domain of positive width");
  return 1.0 / (mean_width * mean_width);
}

Vector move_firefly(const Vector& xi, const Vector& xj, const FaParams& params,
                    double alpha_t, RngStream& rng, const Problem& problem) {
  if (xi.size() != problem.dimension || xj.size() != problem.dimension)
    throw std::invalid_argument("position length does not match problem dimension");
  const double r = euclidean_distance(xi, xj);
  const double beta = attractiveness(params.beta0, params.gamma, r);
  Vector out(problem.dimension);
  for (std::size_t d = 0; d < problem.dimension; ++d) {
    // Fixed expression order: attraction first, then the domain-scaled
    // Gaussian perturbation. One normal draw per dimension, in order.
    const double attracted = xi[d] + beta * (xj[d] - xi[d]);
    out[d] = attracted + (alpha_t * problem.width(d)) * rng.normal();
  }
  return clamp_to_bounds(std::move(out), problem);
}

namespace {

void update_best(Population& pop) {
  for (const Firefly& f : pop.fireflies) {
    if (f.brightness < pop.best_fitness) {
      pop.best_fitness = f.brightness;
      pop.best_position = f.position;
    }
  }
}

}  // namespace

Population initialize_population(const Problem& problem, std::size_t n,
                                 RngStream& rng, Evaluator& eval) {
  if (n == 0) throw std::invalid_argument("population size must be positive");
  Population pop;
  pop.fireflies.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector position(problem.dimension);
    for (std::size_t d = 0; d < problem.dimension; ++d)
      position[d] = problem.lower_bounds[d] +
                    rng.uniform01() * (problem.upper_bounds[d] - problem.lower_bounds[d]);
    const double brightness = eval.evaluate(position);
    pop.fireflies.push_back({std::move(position), brightness});
  }
  pop.generation = 0;
  pop.best_fitness = std::numeric_limits<double>::infinity();
  update_best(pop);
  return pop;
}

void step_generation(Population& pop, const Problem& problem,
                     const FaParams& params, RngStream& rng, Evaluator& eval) {
  const std::size_t n = pop.fireflies.size();
  const double alpha_t = alpha_schedule(params.alpha0, params.theta, pop.generation);

  // Brightness and target positions are frozen at generation start; only the
  // mover's own position advances through its inner loop.
  std::vector<Vector> start_position(n);
  std::vector<double> start_fitness(n);
  for (std::size_t i = 0; i < n; ++i) {
    start_position[i] = pop.fireflies[i].position;
    start_fitness[i] = pop.fireflies[i].brightness;
  }

  for (std::size_t i = 0; i < n; ++i) {
    Vector xi = start_position[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (start_fitness[j] < start_fitness[i])  // strictly brighter; ties stay
        xi = move_firefly(xi, start_position[j], params, alpha_t, rng, problem);
    }
    const double fitness = eval.evaluate(xi);
    if (fitness <= start_fitness[i]) {
      pop.fireflies[i].position = std::move(xi);
      pop.fireflies[i].brightness = fitness;
    }
    // else: keep the start-of-generation position, already in place
  }

  update_best(pop);
  pop.generation += 1;
}

RunResult run(const Problem& problem, const FaParams& params,
              std::uint64_t seed, const Termination& termination,
              const GenerationObserver& observer) {
  validate(params);

  RngStream rng(seed);
  Evaluator eval(problem);
  Population pop = initialize_population(problem, params.population_size, rng, eval);

  RunResult result;
  result.seed = seed;
  result.params = params;

  auto record = [&](const Population& p) {
    GenerationStats stats;
    stats.generation = p.generation;
    stats.best = p.best_fitness;
    double sum = 0.0;
    double worst = -std::numeric_limits<double>::infinity();
    for (const Firefly& f : p.fireflies) {
      sum += f.brightness;
      worst = std::max(worst, f.brightness);
    }
    stats.mean = sum / static_cast<double>(p.fireflies.size());
    stats.worst = worst;
    stats.alpha = alpha_schedule(params.alpha0, params.theta, p.generation);
    stats.evaluations = eval.count();
    result.history.push_back(stats);
  };

  record(pop);
  if (observer) observer(pop);

  result.termination_reason = "max_generations";
  for (std::size_t g = 0; g < params.max_generations; ++g) {
    if (termination.target_fitness && pop.best_fitness <= *termination.target_fitness) {
      result.termination_reason = "target_fitness";
      break;
    }
    if (termination.max_evaluations &&
        eval.count() + params.population_size > *termination.max_evaluations) {
      result.termination_reason = "evaluation_budget";
      break;
    }
    step_generation(pop, problem, params, rng, eval);
    record(pop);
    if (observer) observer(pop);
  }
  if (result.termination_reason == "max_generations" && termination.target_fitness &&
      pop.best_fitness <= *termination.target_fitness)
    result.termination_reason = "target_fitness";

  result.best_position = pop.best_position;
  result.best_fitness = pop.best_fitness;
  result.evaluations = eval.count();
  result.final_population = std::move(pop);
  return result;
}

}  // namespace firefly
