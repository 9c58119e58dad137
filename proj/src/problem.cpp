#include "firefly/problem.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

namespace firefly {

namespace {

void check_problem(const Problem& p) {
  if (p.dimension == 0) throw std::invalid_argument("problem dimension must be positive");
  if (p.lower_bounds.size() != p.dimension || p.upper_bounds.size() != p.dimension)
    throw std::invalid_argument("bounds length does not match problem dimension");
  if (!p.objective) throw std::invalid_argument("problem objective is not set");
  for (std::size_t d = 0; d < p.dimension; ++d) {
    if (!(p.lower_bounds[d] < p.upper_bounds[d]))
      throw std::invalid_argument("lower_bounds[" + std::to_string(d) +
                                  "] must be strictly below upper_bounds[" + std::to_string(d) + "]");
  }
  for (const auto& mode : p.known_modes) {
    if (mode.size() != p.dimension)
      throw std::invalid_argument("known mode length does not match problem dimension");
  }
}

}  // namespace

Problem Problem::minimize(std::size_t dimension, Vector lower, Vector upper,
                          Objective objective, std::vector<Vector> known_modes) {
  Problem p{dimension, std::move(lower), std::move(upper), std::move(objective),
            std::move(known_modes)};
  check_problem(p);
  return p;
}

Problem Problem::maximize(std::size_t dimension, Vector lower, Vector upper,
                          Objective objective, std::vector<Vector> known_modes) {
  Objective negated = [f = std::move(objective)](const Vector& x) { return -f(x); };
  return minimize(dimension, std::move(lower), std::move(upper), std::move(negated),
                  std::move(known_modes));
}

double Problem::mean_width() const {
  double sum = 0.0;
  for (std::size_t d = 0; d < dimension; ++d) sum += width(d);
  return sum / static_cast<double>(dimension);
}

bool Problem::uniform_width() const {
  for (std::size_t d = 1; d < dimension; ++d)
    if (width(d) != width(0)) return false;
  return true;
}

bool Problem::in_bounds(const Vector& position) const {
  if (position.size() != dimension) return false;
  for (std::size_t d = 0; d < dimension; ++d)
    if (position[d] < lower_bounds[d] || position[d] > upper_bounds[d]) return false;
  return true;
}

Vector clamp_to_bounds(Vector position, const Problem& problem) {
  if (position.size() != problem.dimension)
    throw std::invalid_argument("position length does not match problem dimension");
  for (std::size_t d = 0; d < problem.dimension; ++d)
    position[d] = std::min(problem.upper_bounds[d], std::max(problem.lower_bounds[d], position[d]));
  return position;
}

double Evaluator::evaluate(const Vector& position) {
  const double value = problem_->objective(position);
  ++count_;
  if (!std::isfinite(value))
    throw std::runtime_error("objective returned a non-finite value at " +
                             format_position(position));
  return value;
}

std::string format_position(const Vector& position) {
  std::string out = "(";
  char buf[32];
  for (std::size_t d = 0; d < position.size(); ++d) {
    std::snprintf(buf, sizeof(buf), "%.17g", position[d]);
    if (d) out += ", ";
    out += buf;
  }
  out += ")";
  return out;
}

}  // namespace firefly
