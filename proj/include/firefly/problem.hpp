#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace firefly {

using Vector = std::vector<double>;

using Objective = std::function<double(const Vector&)>;

// Box-bounded minimization problem. "Brighter" always means strictly lower
// fitness; maximization problems are wrapped by negation at construction so
// the rest of the library never deals with a sense flag.
// Objectives must be pure: identical input, identical output.
struct Problem {
  std::size_t dimension = 0;
  Vector lower_bounds;
  Vector upper_bounds;
  Objective objective;
  std::vector<Vector> known_modes;  // optional, diagnostics only

  static Problem minimize(std::size_t dimension, Vector lower, Vector upper,
                          Objective objective,
                          std::vector<Vector> known_modes = {});
  static Problem maximize(std::size_t dimension, Vector lower, Vector upper,
                          Objective objective,
                          std::vector<Vector> known_modes = {});

  double width(std::size_t d) const { return upper_bounds[d] - lower_bounds[d]; }
  double mean_width() const;
  bool uniform_width() const;
  bool in_bounds(const Vector& position) const;
};

// Componentwise clamp into [lower, upper]. Idempotent; in-bounds input is
// returned unchanged.
Vector clamp_to_bounds(Vector position, const Problem& problem);

// Objective evaluation with budget accounting. Throws std::runtime_error
// naming the offending position if the objective returns a non-finite value.
class Evaluator {
 public:
  explicit Evaluator(const Problem& problem) : problem_(&problem) {}

  double evaluate(const Vector& position);
  std::uint64_t count() const { return count_; }

 private:
  const Problem* problem_;
  std::uint64_t count_ = 0;
};

std::string format_position(const Vector& position);

}  // namespace firefly
