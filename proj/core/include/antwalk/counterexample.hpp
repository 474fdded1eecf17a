#pragma once

#include <cstdint>
#include <vector>

#include "antwalk/rng.hpp"

namespace antwalk {

/// Edge weights of counterexample(L) in the symmetric-per-side regime: every
/// left-path edge weighs `left`, every right-path edge `right`, and the P-F
/// edge `food`.
struct SideWeights {
  double left = 0.5;
  double right = 0.5;
  double food = 1.0;
};

/// Exact probability that one walk from N covers every left-path edge before
/// hitting F. Computed on a macro absorbing chain whose states are the
/// current end (N or P) and the depths a, b already explored on the left path
/// from the N and P ends; excursions into a path are resolved by the
/// gambler's-ruin laws of the simple walk. O(L^3).
double counterexample_cover_probability(std::uint32_t length, const SideWeights& weights);

/// Probability that the uniform-geodesic rule reinforces the left side:
/// P(only left covered) + P(both covered) / 2.
double counterexample_left_probability(std::uint32_t length, const SideWeights& weights);

/// p(x): left-side reinforcement probability with weights x, 1 - x and 1.
double counterexample_p(std::uint32_t length, double x);
/// F(x) = p(x) - x.
double counterexample_drift(std::uint32_t length, double x);

struct CoverOutcome {
  bool left = false;
  bool right = false;
};

/// Exact-law sampler of which sides one walk covers. Replaces step-by-step
/// simulation by the number of failed excursions (geometric), their split
/// between the sides (binomial) and the maximum depth they reach (inverse
/// CDF), so the cost does not grow with L.
CoverOutcome sample_counterexample_cover(std::uint32_t length, const SideWeights& weights,
                                         RandomStream& rng);

/// Uniform-geodesic ant process on counterexample(L), tracking N1(n) (the
/// common weight of the left edges). Walks sample with weights raised to
/// `alpha`. Returns N1 at the requested steps (sorted, each <= n_steps).
struct CounterexampleRun {
  std::uint64_t n1 = 1;
  std::uint64_t n2 = 1;
  std::uint64_t n = 0;
  std::vector<std::uint64_t> n1_at;  // N1 at each requested checkpoint
};

CounterexampleRun run_counterexample_process(std::uint32_t length, std::uint64_t n_steps,
                                             RandomStream& rng, double alpha = 1.0,
                                             const std::vector<std::uint64_t>& checkpoints = {});

}  // namespace antwalk
