#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "antwalk/rng.hpp"
#include "antwalk/walk.hpp"

namespace antwalk {

/// Normalized losange weights; w[k] belongs to losange edge id k (drawn as
/// edge k+1), so w[0] + w[3] = w[1] + w[4] = 1 on the invariant set.
struct LosangeWeights {
  std::array<double, 5> w{};

  double operator[](std::size_t k) const noexcept { return w[k]; }
  double& operator[](std::size_t k) noexcept { return w[k]; }

  /// W(n) / (n + 2).
  static LosangeWeights from_state(const WeightState& state);
  bool operator==(const LosangeWeights&) const = default;
};

/// Relabeling left <-> right: exchanges edges 1<->4 and 2<->5.
LosangeWeights swap(const LosangeWeights& w);

/// The six linear constraints of the invariant set, with absolute tolerance.
bool in_set_E(const LosangeWeights& w, double tolerance = 0.0);
/// Exact version for an integer state: the constraints scaled by n + 2.
bool in_set_E_exact(const WeightState& state);
bool in_set_E_exact(std::span<const std::uint64_t> weights, std::uint64_t n);

enum class LosangeScenario : std::uint8_t { P12, P45, P135, P234 };

/// Which of the four possible reinforced sets a path is, if any.
std::optional<LosangeScenario> classify_scenario(const ReinforcedPath& path);

struct ReinforcementProbabilities {
  double p12 = 0.0;
  double p45 = 0.0;
  double p135 = 0.0;
  double p234 = 0.0;

  double sum() const noexcept { return p12 + p45 + p135 + p234; }
  double of(LosangeScenario s) const noexcept;
  ReinforcementProbabilities swapped() const noexcept { return {p45, p12, p234, p135}; }
};

/// Closed forms for the uniform-geodesic rule on the invariant set. Throw
/// DomainError when the denominator vanishes.
double p135_closed_form(const LosangeWeights& w);
double p234_closed_form(const LosangeWeights& w);
/// Probability that the walk enters F through edge 2 (= p12 + p234).
double p12_plus_p234_closed_form(const LosangeWeights& w);
/// Second drift coordinate, (w1 - w2) w2 w5 / (w3 + w2 w5 + w1 w4).
double F2_closed_form(const LosangeWeights& w);

/// Scenario probabilities of the uniform-geodesic rule at fixed weights, by
/// absorbing-chain solves: p135 is the probability that the walk enters F
/// through edge 5 without ever crossing edge 4, p234 the mirror event, and
/// p12 / p45 the remaining mass of entering through edge 2 / edge 5. Zero
/// weight edges are removed; throws DomainError when F becomes unreachable.
ReinforcementProbabilities p_vector_exact(const LosangeWeights& w);

/// Expected reinforcement minus w: p12 (1,1,0,0,0) + p135 (1,0,1,0,1)
/// + p234 (0,1,1,1,0) + p45 (0,0,0,1,1) - w.
std::array<double, 5> drift_F(const LosangeWeights& w);
std::array<double, 5> drift_F(const LosangeWeights& w, const ReinforcementProbabilities& p);

/// Indicator vector of a scenario's edge set.
std::array<double, 5> scenario_vector(LosangeScenario s);

/// Y - F(w) - w for the observed reinforcement Y; with it
/// W^(n+1) - W^(n) = (F(W^(n)) + dM) / (n + 3).
std::array<double, 5> martingale_increment(const LosangeWeights& w, const std::array<double, 5>& y);

struct InequalityResult {
  enum class Status { Pass, Fail, Skipped };

  std::string name;
  Status status = Status::Skipped;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs for "<=" bounds, lhs - rhs for ">=" bounds
};

struct InequalityOptions {
  double rho = 0.125;
  double epsilon = 0.0;  // w3 threshold for the (1 - rho) w3 bound; 0 skips it
  double tolerance = 1e-12;
};

/// Evaluates, with exact p-vector values:
///   W3:        p135 + p234 <= w3 (w3^2 + 1/2) / (w3 + 1/2)
///   p135p234:  p135 + p234 <= (1 - rho) w3             (when w3 <= epsilon)
///   F2:        |F2| <= w3 / 2
///   F4F5F3:    F4 + F5 - F3 >= -8 (w3^2 + w5^2)         (when w5 <= 1/2)
std::vector<InequalityResult> inequality_suite(const LosangeWeights& w,
                                               const InequalityOptions& options = {});

/// Uniform point of the invariant set by rejection from the (w1, w2, w3)
/// cube; coordinates lie on the grid k 2^-52 so every constraint is checked
/// without rounding. w3 is drawn from [0, w3_max].
LosangeWeights sample_set_E(RandomStream& rng, double w3_max = 1.0);

/// Largest epsilon (to bisection precision) such that no sampled point with
/// w3 <= epsilon violates p135 + p234 <= (1 - rho) w3.
double estimate_p135p234_epsilon(double rho, RandomStream& rng, std::size_t samples_per_probe = 2000,
                                 int iterations = 30);

}  // namespace antwalk
