#pragma once

#include <cstdint>
#include <vector>

#include "firefly/engine.hpp"

namespace firefly::reductions {

// Special cases of the standard algorithm, implemented standalone next to an
// equivalence checker that runs them against the full engine.
//
//   de_like : gamma = 0, alpha = 0, fixed beta0   (DE variant, no crossover)
//   apso    : gamma = 0, target replaced by g*    (structural substitution)
//   sa_like : beta0 = 0                           (random walk + cooling)
//   hs_pitch: beta0 = 0, noise replaced by eps*x  (pitch adjustment)
//
// de_like and sa_like are exact identities and must match the engine
// bit-for-bit; apso and hs_pitch are substitutions, so their reports are
// expected to show nonzero differences.

enum class Variant { de_like, apso, sa_like, hs_pitch };

const char* variant_name(Variant v);

struct ReductionConfig {
  Variant variant = Variant::de_like;
  FaParams params;     // must satisfy the variant's inducing conditions
  std::uint64_t seed = 0;
};

// Update kernels, one step each. Kernels mirror the engine's expression
// structure exactly; the bit-exact equivalence checks depend on it.
Vector de_like_update(const Vector& xi, const Vector& xj, double beta0);
Vector apso_update(const Vector& xi, const Vector& gstar, double beta0,
                   double alpha, RngStream& rng);
Vector sa_like_update(const Vector& xi, double alpha_t, RngStream& rng);
Vector hs_pitch_update(const Vector& xi, double alpha_t, RngStream& rng);

// One generation of the standalone optimizer loop for the given variant.
// Shares the engine's skeleton: snapshot comparisons, per-firefly greedy
// acceptance, one evaluation per firefly, clamping to bounds.
void reduction_step(Variant variant, Population& pop, const Problem& problem,
                    const FaParams& params, RngStream& rng, Evaluator& eval);

struct EquivalenceReport {
  Variant variant = Variant::de_like;
  std::uint64_t seed = 0;
  std::size_t population_size = 0;
  std::vector<double> max_abs_difference;  // one entry per step
  bool pass = false;                       // every difference exactly 0
};

// Runs the engine and the standalone reduction side by side from identically
// seeded streams and reports the per-step maximum componentwise difference
// between the two trajectories. Throws std::invalid_argument if the config
// does not satisfy the variant's inducing conditions (sa_like and hs_pitch
// additionally require uniform per-dimension widths, see reduction_step).
EquivalenceReport verify_reduction(const ReductionConfig& config,
                                   const Problem& problem, std::size_t steps);

}  // namespace firefly::reductions
