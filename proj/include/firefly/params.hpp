#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace firefly {

// All constants of the standard algorithm. Hard violations are rejected by
// validate(); values outside the recommended practical windows
// (gamma in [0.001, 1000], theta in [0.9, 0.99]) only produce warnings.
struct FaParams {
  double alpha0 = 0.5;              // initial randomness strength
  double theta = 0.97;              // geometric reduction factor, in (0,1)
  double beta0 = 1.0;               // attractiveness at distance zero
  double gamma = 1.0;               // absorption / visibility coefficient
  std::size_t population_size = 25;
  std::size_t max_generations = 200;
};

// Throws std::invalid_argument on hard violations, returns human-readable
// warnings for parameters outside the practical windows.
std::vector<std::string> validate(const FaParams& params);

struct Termination {
  std::optional<double> target_fitness;          // stop once best <= target
  std::optional<std::uint64_t> max_evaluations;  // soft cap, checked at
                                                 // generation boundaries
};

}  // namespace firefly
