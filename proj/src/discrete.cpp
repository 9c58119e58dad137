#include "firefly/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace firefly::discrete {

double sigmoid(double x) {
  return 1.0 / (1.0 + std::exp(-x));
}

std::vector<int> binarize(const Vector& x, const BinaryMapping& mapping,
                          RngStream& rng) {
  std::vector<int> out(x.size());
  for (std::size_t d = 0; d < x.size(); ++d) {
    const double r = rng.uniform01();
    int bit = sigmoid(x[d]) > r ? 1 : 0;
    out[d] = mapping.sign_mode ? 2 * bit - 1 : bit;
  }
  return out;
}

long long modulus_convert(double x, long long k, long long m) {
  if (m <= 0) throw std::invalid_argument("modulus m must be positive");
  const long long floored = static_cast<long long>(std::floor(x + static_cast<double>(k)));
  long long r = floored % m;
  if (r < 0) r += m;
  return r;
}

std::vector<std::size_t> random_keys_decode(const Vector& keys) {
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // stable sort: equal keys keep index order, which breaks ties low-index-first
  std::stable_sort(order.begin(), order.end(),
                   [&keys](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<std::size_t> ranks(keys.size());
  for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = r;
  return ranks;
}

std::size_t hamming_distance(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("hamming_distance requires vectors of equal length");
  std::size_t count = 0;
  for (std::size_t d = 0; d < a.size(); ++d)
    if (a[d] != b[d]) ++count;
  return count;
}

Problem make_onemax_problem(std::size_t dimension) {
  Vector lower(dimension, -6.0), upper(dimension, 6.0);
  auto expected_zero_bits = [](const Vector& x) {
    double sum = 0.0;
    for (double v : x) sum += 1.0 - sigmoid(v);
    return sum;
  };
  return Problem::minimize(dimension, std::move(lower), std::move(upper),
                           expected_zero_bits);
}

}  // namespace firefly::discrete
