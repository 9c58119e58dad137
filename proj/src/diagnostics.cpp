#include "firefly/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace firefly::diagnostics {

double influence_radius(double gamma) {
  if (gamma < 0.0 || !std::isfinite(gamma))
    throw std::invalid_argument("gamma must be finite and nonnegative");
  if (gamma == 0.0) return std::numeric_limits<double>::infinity();
  return std::sqrt(1.0 / gamma);
}

bool is_global_visibility(double radius) {
  return std::isinf(radius);
}

namespace {

// union-find with path compression, no ranking needed at this scale
std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

}  // namespace

SubswarmReport detect_subswarms(const Population& pop,
                                const DistanceMetric& metric, double radius) {
  const std::size_t n = pop.fireflies.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (metric(pop.fireflies[i].position, pop.fireflies[j].position) <= radius) {
        const std::size_t ri = find_root(parent, i);
        const std::size_t rj = find_root(parent, j);
        if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
      }
    }
  }

  SubswarmReport report;
  report.radius = radius;
  report.cluster_of.assign(n, 0);

  // ids by lowest member index: scanning in index order assigns 0 to the
  // cluster containing firefly 0, and so on
  constexpr std::size_t unassigned = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> id_of_root(n, unassigned);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = find_root(parent, i);
    if (id_of_root[root] == unassigned) {
      id_of_root[root] = report.clusters.size();
      report.clusters.push_back({});
      report.clusters.back().id = id_of_root[root];
    }
    const std::size_t id = id_of_root[root];
    report.cluster_of[i] = id;
    report.clusters[id].members.push_back(i);
  }
  report.cluster_count = report.clusters.size();

  const std::size_t dim = n > 0 ? pop.fireflies[0].position.size() : 0;
  for (SubswarmCluster& cluster : report.clusters) {
    cluster.centroid.assign(dim, 0.0);
    cluster.best_index = cluster.members.front();
    for (std::size_t member : cluster.members) {
      const Firefly& f = pop.fireflies[member];
      for (std::size_t d = 0; d < dim; ++d) cluster.centroid[d] += f.position[d];
      if (f.brightness < pop.fireflies[cluster.best_index].brightness)
        cluster.best_index = member;
    }
    for (std::size_t d = 0; d < dim; ++d)
      cluster.centroid[d] /= static_cast<double>(cluster.members.size());
    cluster.best_fitness = pop.fireflies[cluster.best_index].brightness;
  }
  return report;
}

ModeCoverage mode_coverage(const Population& pop, const Problem& problem,
                           double tol, const DistanceMetric& metric) {
  if (problem.known_modes.empty())
    throw std::invalid_argument("mode coverage requires a problem with known modes");
  if (!(tol > 0.0))
    throw std::invalid_argument("capture tolerance must be positive");

  ModeCoverage result;
  result.tolerance = tol;
  for (const Vector& mode : problem.known_modes) {
    ModeReport entry;
    entry.mode = mode;
    entry.nearest_distance = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pop.fireflies.size(); ++i) {
      const double dist = metric(pop.fireflies[i].position, mode);
      if (dist < entry.nearest_distance) {
        entry.nearest_distance = dist;
        entry.nearest_index = i;
      }
    }
    entry.captured = entry.nearest_distance <= tol;
    if (entry.captured) ++result.captured_count;
    result.modes.push_back(std::move(entry));
  }
  result.coverage = static_cast<double>(result.captured_count) /
                    static_cast<double>(result.modes.size());
  return result;
}

double default_capture_tolerance(const Problem& problem) {
  return 0.01 * problem.mean_width();
}

}  // namespace firefly::diagnostics
