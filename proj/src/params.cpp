#include "firefly/params.hpp"

#include <cmath>
#include <stdexcept>

namespace firefly {

std::vector<std::string> validate(const FaParams& p) {
  if (!(p.theta > 0.0 && p.theta < 1.0))
    throw std::invalid_argument("theta must lie strictly inside (0, 1)");
  if (!(p.beta0 >= 0.0) || !std::isfinite(p.beta0))
    throw std::invalid_argument("beta0 must be finite and nonnegative");
  if (!(p.alpha0 >= 0.0) || !std::isfinite(p.alpha0))
    throw std::invalid_argument("alpha0 must be finite and nonnegative");
  if (!(p.gamma >= 0.0) || !std::isfinite(p.gamma))
    throw std::invalid_argument("gamma must be finite and nonnegative");
  if (p.population_size == 0)
    throw std::invalid_argument("population_size must be positive");

  std::vector<std::string> warnings;
  if (p.gamma < 0.001 || p.gamma > 1000.0)
    warnings.push_back("gamma outside the practical window [0.001, 1000]");
  if (p.theta < 0.9 || p.theta > 0.99)
    warnings.push_back("theta outside the recommended window [0.9, 0.99]");
  return warnings;
}

}  // namespace firefly
