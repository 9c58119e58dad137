#include "firefly/distance.hpp"

#include <cmath>
#include <stdexcept>

namespace firefly {

double euclidean_distance(const Vector& a, const Vector& b) {
  double sum = 0.0;
  for (std::size_t d = 0; d < a.size(); ++d) {
    const double diff = a[d] - b[d];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

double DistanceMetric::operator()(const Vector& a, const Vector& b) const {
  if (a.size() != b.size())
    throw std::invalid_argument("distance requires vectors of equal length");
  switch (kind_) {
    case MetricKind::euclidean:
      return euclidean_distance(a, b);
    case MetricKind::hamming: {
      std::size_t count = 0;
      for (std::size_t d = 0; d < a.size(); ++d)
        if (a[d] != b[d]) ++count;
      return static_cast<double>(count);
    }
    case MetricKind::custom:
      return fn_(a, b);
  }
  throw std::logic_error("unreachable metric kind");
}

double pairwise_distance(const Vector& a, const Vector& b, const DistanceMetric& metric) {
  return metric(a, b);
}

}  // namespace firefly
