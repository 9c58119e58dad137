#include "firefly/reductions.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace firefly::reductions {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::de_like: return "de_like";
    case Variant::apso: return "apso";
    case Variant::sa_like: return "sa_like";
    case Variant::hs_pitch: return "hs_pitch";
  }
  return "unknown";
}

Vector de_like_update(const Vector& xi, const Vector& xj, double beta0) {
  Vector out(xi.size());
  for (std::size_t d = 0; d < xi.size(); ++d)
    out[d] = xi[d] + beta0 * (xj[d] - xi[d]);
  return out;
}

Vector apso_update(const Vector& xi, const Vector& gstar, double beta0,
                   double alpha, RngStream& rng) {
  Vector out(xi.size());
  for (std::size_t d = 0; d < xi.size(); ++d) {
    const double attracted = xi[d] + beta0 * (gstar[d] - xi[d]);
    out[d] = attracted + alpha * rng.normal();
  }
  return out;
}

Vector sa_like_update(const Vector& xi, double alpha_t, RngStream& rng) {
  Vector out(xi.size());
  for (std::size_t d = 0; d < xi.size(); ++d)
    out[d] = xi[d] + alpha_t * rng.normal();
  return out;
}

Vector hs_pitch_update(const Vector& xi, double alpha_t, RngStream& rng) {
  Vector out(xi.size());
  for (std::size_t d = 0; d < xi.size(); ++d)
    out[d] = xi[d] + alpha_t * (rng.normal() * xi[d]);
  return out;
}

namespace {

// sa_like and hs_pitch take a scalar step scale, so matching the engine's
// per-dimension width scaling requires every dimension to share one width.
double require_uniform_width(const Problem& problem, Variant variant) {
  if (!problem.uniform_width())
    throw std::invalid_argument(std::string(variant_name(variant)) +
                                " verification requires uniform per-dimension bounds widths");
  return problem.width(0);
}

std::size_t population_best_index(const std::vector<double>& fitness) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < fitness.size(); ++i)
    if (fitness[i] < fitness[best]) best = i;
  return best;
}

void accept_and_advance(Population& pop, std::size_t i, Vector candidate,
                        double start_fitness, Evaluator& eval) {
  const double fitness = eval.evaluate(candidate);
  if (fitness <= start_fitness) {
    pop.fireflies[i].position = std::move(candidate);
    pop.fireflies[i].brightness = fitness;
  }
}

}  // namespace

void reduction_step(Variant variant, Population& pop, const Problem& problem,
                    const FaParams& params, RngStream& rng, Evaluator& eval) {
  const std::size_t n = pop.fireflies.size();
  const double alpha_t = alpha_schedule(params.alpha0, params.theta, pop.generation);

  std::vector<Vector> start_position(n);
  std::vector<double> start_fitness(n);
  for (std::size_t i = 0; i < n; ++i) {
    start_position[i] = pop.fireflies[i].position;
    start_fitness[i] = pop.fireflies[i].brightness;
  }

  switch (variant) {
    case Variant::de_like: {
      for (std::size_t i = 0; i < n; ++i) {
        Vector xi = start_position[i];
        for (std::size_t j = 0; j < n; ++j)
          if (start_fitness[j] < start_fitness[i])
            xi = clamp_to_bounds(de_like_update(xi, start_position[j], params.beta0), problem);
        accept_and_advance(pop, i, std::move(xi), start_fitness[i], eval);
      }
      break;
    }
    case Variant::sa_like: {
      const double step = alpha_t * require_uniform_width(problem, variant);
      for (std::size_t i = 0; i < n; ++i) {
        Vector xi = start_position[i];
        for (std::size_t j = 0; j < n; ++j)
          if (start_fitness[j] < start_fitness[i])
            xi = clamp_to_bounds(sa_like_update(xi, step, rng), problem);
        accept_and_advance(pop, i, std::move(xi), start_fitness[i], eval);
      }
      break;
    }
    case Variant::hs_pitch: {
      const double step = alpha_t * require_uniform_width(problem, variant);
      for (std::size_t i = 0; i < n; ++i) {
        Vector xi = start_position[i];
        for (std::size_t j = 0; j < n; ++j)
          if (start_fitness[j] < start_fitness[i])
            xi = clamp_to_bounds(hs_pitch_update(xi, step, rng), problem);
        accept_and_advance(pop, i, std::move(xi), start_fitness[i], eval);
      }
      break;
    }
    case Variant::apso: {
      // Structural substitution: every firefly moves once, toward the
      // population best of the generation start instead of pairwise targets.
      const Vector gstar = start_position[population_best_index(start_fitness)];
      const double step = alpha_t * problem.mean_width();
      for (std::size_t i = 0; i < n; ++i) {
        Vector xi = clamp_to_bounds(
            apso_update(start_position[i], gstar, params.beta0, step, rng), problem);
        accept_and_advance(pop, i, std::move(xi), start_fitness[i], eval);
      }
      break;
    }
  }

  for (const Firefly& f : pop.fireflies) {
    if (f.brightness < pop.best_fitness) {
      pop.best_fitness = f.brightness;
      pop.best_position = f.position;
    }
  }
  pop.generation += 1;
}

namespace {

void check_inducing_conditions(const ReductionConfig& config, const Problem& problem) {
  const FaParams& p = config.params;
  switch (config.variant) {
    case Variant::de_like:
      if (p.gamma != 0.0 || p.alpha0 != 0.0 || !(p.beta0 > 0.0))
        throw std::invalid_argument("de_like requires gamma = 0, alpha0 = 0 and beta0 > 0");
      break;
    case Variant::apso:
      if (p.gamma != 0.0)
        throw std::invalid_argument("apso requires gamma = 0");
      break;
    case Variant::sa_like:
      if (p.beta0 != 0.0)
        throw std::invalid_argument("sa_like requires beta0 = 0");
      require_uniform_width(problem, config.variant);
      break;
    case Variant::hs_pitch:
      if (p.beta0 != 0.0)
        throw std::invalid_argument("hs_pitch requires beta0 = 0");
      require_uniform_width(problem, config.variant);
      break;
  }
}

}  // namespace

EquivalenceReport verify_reduction(const ReductionConfig& config,
                                   const Problem& problem, std::size_t steps) {
  check_inducing_conditions(config, problem);
  validate(config.params);

  RngStream rng_engine(config.seed);
  Evaluator eval_engine(problem);
  Population pop_engine =
      initialize_population(problem, config.params.population_size, rng_engine, eval_engine);

  RngStream rng_reduction(config.seed);
  Evaluator eval_reduction(problem);
  Population pop_reduction =
      initialize_population(problem, config.params.population_size, rng_reduction, eval_reduction);

  EquivalenceReport report;
  report.variant = config.variant;
  report.seed = config.seed;
  report.population_size = config.params.population_size;
  report.max_abs_difference.reserve(steps);

  for (std::size_t s = 0; s < steps; ++s) {
    step_generation(pop_engine, problem, config.params, rng_engine, eval_engine);
    reduction_step(config.variant, pop_reduction, problem, config.params, rng_reduction,
                   eval_reduction);
    double max_diff = 0.0;
    for (std::size_t i = 0; i < pop_engine.fireflies.size(); ++i)
      for (std::size_t d = 0; d < problem.dimension; ++d)
        max_diff = std::max(max_diff,
                            std::fabs(pop_engine.fireflies[i].position[d] -
                                      pop_reduction.fireflies[i].position[d]));
    report.max_abs_difference.push_back(max_diff);
  }

  report.pass = true;
  for (double diff : report.max_abs_difference)
    if (diff != 0.0) report.pass = false;
  return report;
}

}  // namespace firefly::reductions
