#pragma once

#include <functional>

#include "firefly/problem.hpp"

namespace firefly {

enum class MetricKind { euclidean, hamming, custom };

// Distance between two positions. Euclidean is the default for continuous
// search; Hamming (count of differing components) serves discrete encodings;
// custom covers problem-specific notions such as routing delay.
class DistanceMetric {
 public:
  using Fn = std::function<double(const Vector&, const Vector&)>;

  static DistanceMetric euclidean() { return DistanceMetric(MetricKind::euclidean, {}); }
  static DistanceMetric hamming() { return DistanceMetric(MetricKind::hamming, {}); }
  static DistanceMetric custom(Fn fn) { return DistanceMetric(MetricKind::custom, std::move(fn)); }

  MetricKind kind() const { return kind_; }

  // Throws std::invalid_argument on length mismatch.
  double operator()(const Vector& a, const Vector& b) const;

 private:
  DistanceMetric(MetricKind kind, Fn fn) : kind_(kind), fn_(std::move(fn)) {}

  MetricKind kind_;
  Fn fn_;
};

double pairwise_distance(const Vector& a, const Vector& b, const DistanceMetric& metric);

double euclidean_distance(const Vector& a, const Vector& b);

}  // namespace firefly
