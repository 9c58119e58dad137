#pragma once

#include <cstddef>
#include <vector>

#include "firefly/distance.hpp"
#include "firefly/engine.hpp"

namespace firefly::diagnostics {

// R = sqrt(1 / gamma). gamma = 0 has no decay at all, so the radius is
// reported as +infinity ("global visibility"). Throws for gamma < 0.
double influence_radius(double gamma);

bool is_global_visibility(double radius);

struct SubswarmCluster {
  std::size_t id = 0;
  std::vector<std::size_t> members;  // ascending firefly indices
  Vector centroid;
  double best_fitness = 0.0;
  std::size_t best_index = 0;
};

struct SubswarmReport {
  double radius = 0.0;
  std::vector<std::size_t> cluster_of;  // firefly index -> cluster id
  std::size_t cluster_count = 0;
  std::vector<SubswarmCluster> clusters;
};

// Single-linkage clustering at threshold R: two fireflies share a cluster iff
// they are connected by a chain of pairwise distances <= R. This mirrors the
// attraction mechanism's chain of visibility. Cluster ids are assigned by
// lowest member index, so the labeling is deterministic and order-stable.
SubswarmReport detect_subswarms(const Population& pop,
                                const DistanceMetric& metric, double radius);

struct ModeReport {
  Vector mode;
  double nearest_distance = 0.0;
  std::size_t nearest_index = 0;
  bool captured = false;
};

struct ModeCoverage {
  double tolerance = 0.0;
  std::vector<ModeReport> modes;
  std::size_t captured_count = 0;
  double coverage = 0.0;  // captured / total, in [0, 1]
};

// A mode counts as captured iff some firefly lies within tol of it.
// Throws std::invalid_argument when the problem lists no known modes.
ModeCoverage mode_coverage(const Population& pop, const Problem& problem,
                           double tol,
                           const DistanceMetric& metric = DistanceMetric::euclidean());

// Scale-free default capture tolerance: 1% of the mean domain width.
double default_capture_tolerance(const Problem& problem);

}  // namespace firefly::diagnostics
