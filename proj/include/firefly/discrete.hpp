#pragma once

#include <cstdint>
#include <vector>

#include "firefly/problem.hpp"
#include "firefly/rng.hpp"

namespace firefly::discrete {

// 1 / (1 + e^-x), strictly increasing, output in (0, 1).
double sigmoid(double x);

struct BinaryMapping {
  bool sign_mode = false;  // emit {-1, +1} via u = 2S - 1 instead of {0, 1}
};

// Random-threshold binarization: per component, draw r uniform on [0,1) and
// emit 1 iff sigmoid(x_d) > r. One uniform draw per component, in dimension
// order. Ones-frequency converges to sigmoid(x_d).
std::vector<int> binarize(const Vector& x, const BinaryMapping& mapping,
                          RngStream& rng);

// floor(x + k) mod m with a nonnegative result in {0, ..., m-1}, negative
// inputs included. Throws std::invalid_argument for m <= 0.
long long modulus_convert(double x, long long k, long long m);

struct IntegerMapping {
  long long offset = 0;   // k
  long long modulus = 1;  // m, must stay positive
  long long convert(double x) const { return modulus_convert(x, offset, modulus); }
};

// Random-keys decoding: output[p] is the ascending rank of keys[p], ties
// broken by lower index. Always a valid permutation of {0, ..., D-1};
// invariant under positive affine transforms of the keys.
std::vector<std::size_t> random_keys_decode(const Vector& keys);

// Count of differing components. Throws std::invalid_argument on length
// mismatch.
std::size_t hamming_distance(const std::vector<int>& a, const std::vector<int>& b);

// Demonstration discrete problem: continuous relaxation of OneMax on
// dimension bits. The objective is the expected number of zero bits under
// random-threshold binarization, sum(1 - sigmoid(x_d)); it is deterministic,
// so it satisfies the purity contract, and a solved run decodes to the
// all-ones string via binarize().
Problem make_onemax_problem(std::size_t dimension);

}  // namespace firefly::discrete
