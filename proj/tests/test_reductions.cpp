#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "firefly/benchmarks.hpp"
#include "firefly/reductions.hpp"

using namespace firefly;
using namespace firefly::reductions;

namespace {

double sphere(const Vector& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

}  // namespace

TEST_CASE("de_like_update examples") {
  CHECK(de_like_update({0.0, 0.0}, {2.0, 2.0}, 0.5) == Vector{1.0, 1.0});
  const Vector xi = {3.0, -1.0};
  CHECK(de_like_update(xi, {9.0, 9.0}, 0.0) == xi);
  const Vector xj = {9.0, 9.0};
  CHECK(de_like_update({3.0, -1.0}, xj, 1.0) == xj);
}

TEST_CASE("apso_update examples") {
  RngStream rng(1);
  const Vector gstar = {1.0, 2.0};
  CHECK(apso_update({5.0, 5.0}, gstar, 1.0, 0.0, rng) == gstar);
  const Vector xi = {5.0, 5.0};
  CHECK(apso_update(xi, gstar, 0.0, 0.0, rng) == xi);
  CHECK(apso_update({4.0, 0.0}, {0.0, 0.0}, 0.25, 0.0, rng) == Vector{3.0, 0.0});
}

TEST_CASE("sa_like_update: frozen system and linear scaling") {
  const Vector xi = {1.0, -2.0, 0.5};
  {
    RngStream rng(3);
    CHECK(sa_like_update(xi, 0.0, rng) == xi);
  }
  // the same eps draw scales linearly with alpha: from the origin the
  // displacement doubles exactly (multiplication by 2 is lossless)
  RngStream rng_a(42), rng_b(42);
  const Vector origin = {0.0, 0.0, 0.0};
  const Vector step1 = sa_like_update(origin, 1.0, rng_a);
  const Vector step2 = sa_like_update(origin, 2.0, rng_b);
  for (std::size_t d = 0; d < origin.size(); ++d) CHECK(step2[d] == 2.0 * step1[d]);
}

TEST_CASE("sa_like_update displacement has zero mean") {
  RngStream rng(2025);
  const double alpha_t = 0.7;
  const int n = 100000;
  double sum0 = 0.0, sum1 = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vector out = sa_like_update({0.0, 0.0}, alpha_t, rng);
    sum0 += out[0];
    sum1 += out[1];
  }
  const double bound = 3.0 * alpha_t / std::sqrt(static_cast<double>(n));
  CHECK(std::abs(sum0 / n) < bound);
  CHECK(std::abs(sum1 / n) < bound);
}

TEST_CASE("hs_pitch_update: multiplicative noise") {
  {
    RngStream rng(8);
    const Vector zero = {0.0, 0.0, 0.0};
    CHECK(hs_pitch_update(zero, 5.0, rng) == zero);  // origin is a fixed point
  }
  {
    RngStream rng(8);
    const Vector xi = {1.0, 10.0};
    CHECK(hs_pitch_update(xi, 0.0, rng) == xi);
  }
  // component-2 perturbation is exactly 10x its raw draw times alpha
  RngStream rng_draws(64), rng_apply(64);
  const double e0 = rng_draws.normal();
  const double e1 = rng_draws.normal();
  const double alpha_t = 0.3;
  const Vector out = hs_pitch_update({1.0, 10.0}, alpha_t, rng_apply);
  CHECK(out[0] == 1.0 + alpha_t * (e0 * 1.0));
  CHECK(out[1] == 10.0 + alpha_t * (e1 * 10.0));
}

TEST_CASE("de_like equals move_firefly bit-for-bit when gamma = alpha = 0") {
  const Problem p = Problem::minimize(2, {-1e6, -1e6}, {1e6, 1e6}, sphere);
  RngStream rng(303);
  for (int i = 0; i < 2000; ++i) {
    FaParams params{.alpha0 = 0.0, .beta0 = rng.uniform(0.0, 2.0), .gamma = 0.0};
    const Vector xi = {rng.uniform(-100.0, 100.0), rng.uniform(-100.0, 100.0)};
    const Vector xj = {rng.uniform(-100.0, 100.0), rng.uniform(-100.0, 100.0)};
    RngStream move_rng(1);
    CHECK(move_firefly(xi, xj, params, 0.0, move_rng, p) ==
          de_like_update(xi, xj, params.beta0));
  }
}

TEST_CASE("verify_reduction: de_like is an exact identity") {
  const Problem p = benchmarks::make_benchmark("sphere", 2);
  ReductionConfig config;
  config.variant = Variant::de_like;
  config.params = FaParams{.alpha0 = 0.0, .beta0 = 0.5, .gamma = 0.0};
  config.params.population_size = 2;
  config.seed = 9;
  const auto report = verify_reduction(config, p, 10);
  CHECK(report.pass);
  for (double diff : report.max_abs_difference) CHECK(diff == 0.0);
}

TEST_CASE("verify_reduction: sa_like is an exact identity") {
  const Problem p = benchmarks::make_benchmark("sphere", 2);
  ReductionConfig config;
  config.variant = Variant::sa_like;
  config.params = FaParams{.alpha0 = 0.5, .theta = 0.95, .beta0 = 0.0, .gamma = 1.0};
  config.params.population_size = 6;
  config.seed = 10;
  const auto report = verify_reduction(config, p, 10);
  CHECK(report.pass);
}

TEST_CASE("verify_reduction: apso diverges once a mid-rank firefly attracts") {
  // Three fireflies: the dimmest is pulled by both brighter ones in the
  // engine, but only by g* in the APSO loop, so trajectories split at once.
  const Problem p = benchmarks::make_benchmark("sphere", 2);
  ReductionConfig config;
  config.variant = Variant::apso;
  config.params = FaParams{.alpha0 = 0.0, .beta0 = 0.5, .gamma = 0.0};
  config.params.population_size = 3;
  config.seed = 1;
  const auto report = verify_reduction(config, p, 5);
  CHECK_FALSE(report.pass);
  double max_diff = 0.0;
  for (double diff : report.max_abs_difference) max_diff = std::max(max_diff, diff);
  CHECK(max_diff > 0.0);
}

TEST_CASE("verify_reduction: apso with two fireflies collapses to the identity") {
  // With n = 2 and alpha = 0 the only brighter firefly is g* itself.
  const Problem p = benchmarks::make_benchmark("sphere", 2);
  ReductionConfig config;
  config.variant = Variant::apso;
  config.params = FaParams{.alpha0 = 0.0, .beta0 = 0.5, .gamma = 0.0};
  config.params.population_size = 2;
  config.seed = 4;
  const auto report = verify_reduction(config, p, 5);
  CHECK(report.pass);
}

TEST_CASE("verify_reduction: hs_pitch substitution diverges from the engine") {
  const Problem p = benchmarks::make_benchmark("sphere", 2);
  ReductionConfig config;
  config.variant = Variant::hs_pitch;
  config.params = FaParams{.alpha0 = 0.5, .theta = 0.95, .beta0 = 0.0, .gamma = 1.0};
  config.params.population_size = 5;
  config.seed = 2;
  const auto report = verify_reduction(config, p, 5);
  CHECK_FALSE(report.pass);
}

TEST_CASE("verify_reduction rejects configs that break the inducing conditions") {
  const Problem p = benchmarks::make_benchmark("sphere", 2);
  ReductionConfig config;
  config.variant = Variant::de_like;
  config.params = FaParams{.alpha0 = 0.5, .beta0 = 0.5, .gamma = 0.0};  // alpha != 0
  CHECK_THROWS_AS(verify_reduction(config, p, 3), std::invalid_argument);

  config.variant = Variant::sa_like;
  config.params = FaParams{.alpha0 = 0.5, .beta0 = 0.5, .gamma = 1.0};  // beta0 != 0
  CHECK_THROWS_AS(verify_reduction(config, p, 3), std::invalid_argument);

  // sa_like on non-uniform widths cannot match a scalar step scale
  const Problem rect = Problem::minimize(2, {0.0, 0.0}, {1.0, 3.0}, sphere);
  config.params = FaParams{.alpha0 = 0.5, .beta0 = 0.0, .gamma = 1.0};
  CHECK_THROWS_AS(verify_reduction(config, rect, 3), std::invalid_argument);

  config.variant = Variant::apso;
  config.params = FaParams{.alpha0 = 0.0, .beta0 = 0.5, .gamma = 0.5};  // gamma != 0
  CHECK_THROWS_AS(verify_reduction(config, p, 3), std::invalid_argument);
}

TEST_CASE("reductions are deterministic given the seed") {
  const Problem p = benchmarks::make_benchmark("sphere", 2);
  for (Variant variant : {Variant::de_like, Variant::sa_like, Variant::hs_pitch, Variant::apso}) {
    FaParams params;
    params.population_size = 4;
    if (variant == Variant::de_like || variant == Variant::apso) {
      params.gamma = 0.0;
      params.alpha0 = 0.0;
      params.beta0 = 0.5;
    } else {
      params.beta0 = 0.0;
      params.alpha0 = 0.4;
    }
    auto run_once = [&]() {
      RngStream rng(55);
      Evaluator eval(p);
      Population pop = initialize_population(p, params.population_size, rng, eval);
      for (int s = 0; s < 5; ++s) reduction_step(variant, pop, p, params, rng, eval);
      return pop;
    };
    const Population a = run_once();
    const Population b = run_once();
    for (std::size_t i = 0; i < a.fireflies.size(); ++i)
      CHECK(a.fireflies[i].position == b.fireflies[i].position);
  }
}
