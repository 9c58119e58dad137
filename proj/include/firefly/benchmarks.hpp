#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "firefly/problem.hpp"

namespace firefly::benchmarks {

struct BenchmarkInfo {
  std::string name;
  std::size_t fixed_dimension = 0;  // 0 = any dimension >= 1
  double optimum = 0.0;             // objective value at every listed mode
  std::size_t mode_count = 0;       // for the default 2-D instance
  std::string summary;
};

const std::vector<BenchmarkInfo>& benchmark_catalog();

// Stable CLI-facing names: sphere, rastrigin, ackley (any dimension),
// himmelblau, two_wells (2-D only). Bounds, objective and known modes are
// populated; every listed mode evaluates to the stated optimum within 1e-6
// (asserted at construction in debug builds).
// Throws std::invalid_argument for unknown names or unsupported dimensions.
Problem make_benchmark(const std::string& name, std::size_t dimension);

}  // namespace firefly::benchmarks
