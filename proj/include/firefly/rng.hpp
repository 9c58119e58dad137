#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace firefly {

// Seeded random stream owned by exactly one run at a time.
//
// Determinism contract: the same seed yields the same sequence of draws on
// any platform (mt19937_64 is fully specified; the uniform and Gaussian
// conversions below avoid the implementation-defined std distributions).
// Draw accounting, so call sequences can be replayed and compared:
//   uniform01()  consumes 1 engine output
//   normal()     consumes 2 engine outputs (Box-Muller, no cached spare)
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  // Uniform on [0, 1).
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  // Standard normal (mean 0, variance 1) via Box-Muller.
  double normal() {
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

 private:
  static constexpr double two_pi = 6.283185307179586476925286766559;

  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace firefly
