#include "firefly/benchmarks.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace firefly::benchmarks {

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;

Problem sphere(std::size_t dim) {
  auto f = [](const Vector& x) {
    double sum = 0.0;
    for (double v : x) sum += v * v;
    return sum;
  };
  return Problem::minimize(dim, Vector(dim, -5.12), Vector(dim, 5.12), f,
                           {Vector(dim, 0.0)});
}

Problem rastrigin(std::size_t dim) {
  auto f = [dim](const Vector& x) {
    double sum = 10.0 * static_cast<double>(dim);
    for (double v : x) sum += v * v - 10.0 * std::cos(2.0 * pi * v);
    return sum;
  };
  return Problem::minimize(dim, Vector(dim, -5.12), Vector(dim, 5.12), f,
                           {Vector(dim, 0.0)});
}

Problem ackley(std::size_t dim) {
  auto f = [dim](const Vector& x) {
    double sq = 0.0, cs = 0.0;
    for (double v : x) {
      sq += v * v;
      cs += std::cos(2.0 * pi * v);
    }
    const double n = static_cast<double>(dim);
    // grouped so both cancellations are exact at the origin
    return (20.0 - 20.0 * std::exp(-0.2 * std::sqrt(sq / n))) +
           (std::exp(1.0) - std::exp(cs / n));
  };
  return Problem::minimize(dim, Vector(dim, -32.768), Vector(dim, 32.768), f,
                           {Vector(dim, 0.0)});
}

Problem himmelblau() {
  auto f = [](const Vector& x) {
    const double a = x[0] * x[0] + x[1] - 11.0;
    const double b = x[0] + x[1] * x[1] - 7.0;
    return a * a + b * b;
  };
  // The four minima, to full double precision.
  std::vector<Vector> modes = {
      {3.0, 2.0},
      {-2.805118086952745, 3.131312518250573},
      {-3.779310253377747, -3.2831859912861696},
      {3.5844283403304917, -1.8481265269644036},
  };
  return Problem::minimize(2, Vector(2, -5.0), Vector(2, 5.0), f, std::move(modes));
}

// Two equal inverted Gaussian wells on an elongated strip. The domain is
// [-24, 24] x [-1, 1], so the mean width is 25 and estimate_gamma returns
// exactly 0.0016 (influence radius 25), while the wells sit 47 apart next to
// the short edges. Settled subswarms are therefore separated well beyond the
// influence radius, which is what gives the subswarm experiments their
// ground truth; a square domain cannot do this, since no two interior points
// are farther apart than ~1.4x the mean width.
constexpr double well_sigma = 1.0;
const Vector well_a = {-23.5, 0.0};
const Vector well_b = {23.5, 0.0};

Problem two_wells() {
  auto f = [](const Vector& x) {
    const double denom = 2.0 * well_sigma * well_sigma;
    double da = 0.0, db = 0.0;
    for (std::size_t d = 0; d < 2; ++d) {
      da += (x[d] - well_a[d]) * (x[d] - well_a[d]);
      db += (x[d] - well_b[d]) * (x[d] - well_b[d]);
    }
    return -std::exp(-da / denom) - std::exp(-db / denom);
  };
  return Problem::minimize(2, {-24.0, -1.0}, {24.0, 1.0}, f, {well_a, well_b});
}

}  // namespace

const std::vector<BenchmarkInfo>& benchmark_catalog() {
  static const std::vector<BenchmarkInfo> catalog = {
      {"sphere", 0, 0.0, 1, "sum of squares, unimodal"},
      {"rastrigin", 0, 0.0, 1, "highly multimodal, unique global optimum at origin"},
      {"ackley", 0, 0.0, 1, "multimodal, unique global optimum at origin"},
      {"himmelblau", 2, 0.0, 4, "four equal minima, classic multimodal test"},
      {"two_wells", 2, -1.0, 2, "two equal Gaussian wells on an elongated strip"},
  };
  return catalog;
}

Problem make_benchmark(const std::string& name, std::size_t dimension) {
  const BenchmarkInfo* info = nullptr;
  for (const BenchmarkInfo& entry : benchmark_catalog())
    if (entry.name == name) info = &entry;
  if (!info) throw std::invalid_argument("unknown benchmark: " + name);
  if (dimension == 0) throw std::invalid_argument("benchmark dimension must be positive");
  if (info->fixed_dimension != 0 && dimension != info->fixed_dimension)
    throw std::invalid_argument(name + " supports only dimension " +
                                std::to_string(info->fixed_dimension));

  Problem problem = [&]() {
    if (name == "sphere") return sphere(dimension);
    if (name == "rastrigin") return rastrigin(dimension);
    if (name == "ackley") return ackley(dimension);
    if (name == "himmelblau") return himmelblau();
    return two_wells();
  }();

#ifndef NDEBUG
  for (const Vector& mode : problem.known_modes)
    assert(std::fabs(problem.objective(mode) - info->optimum) <= 1e-6);
#endif
  return problem;
}

}  // namespace firefly::benchmarks
