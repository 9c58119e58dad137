#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "firefly/benchmarks.hpp"
#include "firefly/diagnostics.hpp"

using namespace firefly;
using namespace firefly::diagnostics;

namespace {

Population population_at(const std::vector<Vector>& positions) {
  Population pop;
  for (const auto& pos : positions) {
    double fit = 0.0;
    for (double v : pos) fit += v * v;
    pop.fireflies.push_back({pos, fit});
  }
  return pop;
}

}  // namespace

TEST_CASE("influence_radius examples") {
  CHECK(influence_radius(1.0) == 1.0);
  CHECK(influence_radius(4.0) == 0.5);
  CHECK(influence_radius(0.01) == 10.0);
  CHECK(is_global_visibility(influence_radius(0.0)));
  CHECK_THROWS_AS(influence_radius(-1.0), std::invalid_argument);
}

TEST_CASE("detect_subswarms basics") {
  const auto metric = DistanceMetric::euclidean();

  SUBCASE("all fireflies at one point form one cluster") {
    const auto pop = population_at({{1.0, 1.0}, {1.0, 1.0}, {1.0, 1.0}});
    CHECK(detect_subswarms(pop, metric, 0.5).cluster_count == 1);
  }
  SUBCASE("two groups separated far beyond R form two clusters") {
    const auto pop = population_at(
        {{0.0, 0.0}, {0.05, 0.05}, {0.1, 0.0}, {10.0, 0.0}, {10.05, 0.05}});
    const auto report = detect_subswarms(pop, metric, 1.0);
    CHECK(report.cluster_count == 2);
    CHECK(report.cluster_of == std::vector<std::size_t>{0, 0, 0, 1, 1});
    CHECK(report.clusters[0].members == std::vector<std::size_t>{0, 1, 2});
    CHECK(report.clusters[1].best_fitness ==
          doctest::Approx(100.0).epsilon(1e-12));
  }
  SUBCASE("global visibility is always one cluster") {
    const auto pop = population_at({{-4.0, -4.0}, {4.0, 4.0}, {0.0, 4.0}});
    CHECK(detect_subswarms(pop, metric, influence_radius(0.0)).cluster_count == 1);
  }
  SUBCASE("chained neighbors merge transitively") {
    const auto pop = population_at({{0.0, 0.0}, {0.9, 0.0}, {1.8, 0.0}});
    CHECK(detect_subswarms(pop, metric, 1.0).cluster_count == 1);
    CHECK(detect_subswarms(pop, metric, 0.5).cluster_count == 3);
  }
}

TEST_CASE("detect_subswarms is order-invariant up to relabeling") {
  RngStream rng(44);
  std::vector<Vector> positions;
  for (int i = 0; i < 20; ++i)
    positions.push_back({rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)});
  const auto metric = DistanceMetric::euclidean();
  const auto base = detect_subswarms(population_at(positions), metric, 1.5);

  auto shuffled = positions;
  std::vector<std::size_t> order(positions.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  // deterministic shuffle via seeded draws
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[static_cast<std::size_t>(rng.uniform(0.0, double(i)))]);
  for (std::size_t i = 0; i < order.size(); ++i) shuffled[i] = positions[order[i]];
  const auto moved = detect_subswarms(population_at(shuffled), metric, 1.5);

  CHECK(moved.cluster_count == base.cluster_count);
  // same partition: pairs co-clustered before stay co-clustered after
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size(); ++b)
      CHECK((base.cluster_of[order[a]] == base.cluster_of[order[b]]) ==
            (moved.cluster_of[a] == moved.cluster_of[b]));
}

TEST_CASE("cluster count is non-increasing in R") {
  RngStream rng(90);
  std::vector<Vector> positions;
  for (int i = 0; i < 25; ++i)
    positions.push_back({rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)});
  const auto pop = population_at(positions);
  const auto metric = DistanceMetric::euclidean();
  std::size_t previous = positions.size() + 1;
  for (double radius : {0.1, 0.3, 0.8, 1.5, 3.0, 6.0, 12.0, 30.0}) {
    const std::size_t count = detect_subswarms(pop, metric, radius).cluster_count;
    CHECK(count <= previous);
    previous = count;
  }
}

TEST_CASE("mode_coverage basics") {
  const Problem p = benchmarks::make_benchmark("himmelblau", 2);

  SUBCASE("population sitting on every mode covers fully") {
    const auto pop = population_at(p.known_modes);
    const auto coverage = mode_coverage(pop, p, 0.1);
    CHECK(coverage.coverage == 1.0);
    CHECK(coverage.captured_count == 4);
    for (const auto& m : coverage.modes) CHECK(m.nearest_distance == 0.0);
  }
  SUBCASE("population far from every mode covers nothing") {
    const auto pop = population_at({{0.0, 0.0}, {0.2, 0.1}});
    const auto coverage = mode_coverage(pop, p, 0.1);
    CHECK(coverage.coverage == 0.0);
    CHECK(coverage.captured_count == 0);
  }
  SUBCASE("missing known modes is an error") {
    const Problem bare = Problem::minimize(
        2, {-1.0, -1.0}, {1.0, 1.0},
        [](const Vector& x) { return x[0] * x[0] + x[1] * x[1]; });
    const auto pop = population_at({{0.0, 0.0}});
    CHECK_THROWS_AS(mode_coverage(pop, bare, 0.1), std::invalid_argument);
  }
  SUBCASE("coverage is monotone in the tolerance") {
    RngStream rng(7);
    std::vector<Vector> positions;
    for (int i = 0; i < 10; ++i)
      positions.push_back({rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)});
    const auto pop = population_at(positions);
    double previous = 0.0;
    for (double tol : {0.05, 0.2, 0.8, 2.0, 8.0, 20.0}) {
      const double c = mode_coverage(pop, p, tol).coverage;
      CHECK(c >= previous);
      previous = c;
    }
    CHECK(previous == 1.0);  // tol of 20 spans the whole domain
  }
}

TEST_CASE("default capture tolerance is 1% of the mean width") {
  const Problem p = benchmarks::make_benchmark("sphere", 3);
  CHECK(default_capture_tolerance(p) == doctest::Approx(0.1024).epsilon(1e-12));
}
