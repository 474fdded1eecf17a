#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "antwalk/rng.hpp"

namespace antwalk {

/// phi_b(i) = max(c0, (i - b i^alpha) / h) and psi(i) = alpha (i + c2) / h.
struct GeneralizedUrnParams {
  double b = 1.0;
  double alpha = 2.0 / 3.0;
  double h = 1.0;   // h_min of the shorter branch
  double c0 = 1.0;  // conductance of the shorter branch at time 0
  double c2 = 1.0;

  double phi(std::uint64_t i) const;
  double psi(std::uint64_t i) const;
};

enum class UrnKind : std::uint8_t { Polya, FriedmanLike, Generalized, JansonFifth };

std::string_view to_string(UrnKind kind) noexcept;
UrnKind parse_urn_kind(std::string_view name);

/// Two-colour urn with state R (the tracked count) after n draws.
///
///   Polya:        R / (n + red0 + black0),               R_0 = red0
///   FriedmanLike: z (z^2 + 1/2) / (z + 1/2), z = R/(n+2), R_0 = 1
///   Generalized:  phi_b(R) / (phi_b(R) + psi(n - R)),    R_0 = 0
///   JansonFifth:  (R/5) / (n + n0 + 2 - R + R/5),       R_0 = 1
struct UrnSpec {
  UrnKind kind = UrnKind::Polya;
  std::uint64_t red0 = 1;
  std::uint64_t black0 = 1;
  GeneralizedUrnParams generalized{};
  std::uint64_t n0 = 0;

  static UrnSpec polya(std::uint64_t red0 = 1, std::uint64_t black0 = 1);
  static UrnSpec friedman_like();
  static UrnSpec generalized_urn(const GeneralizedUrnParams& params);
  static UrnSpec janson_fifth(std::uint64_t n0 = 0);

  std::uint64_t initial_state() const noexcept;
  /// Throws DomainError if the state is invalid or the probability leaves [0, 1].
  double increment_probability(std::uint64_t state, std::uint64_t n) const;
};

/// One draw: returns the next state.
std::uint64_t urn_step(const UrnSpec& spec, std::uint64_t state, std::uint64_t n,
                       RandomStream& rng);

/// Uses one uniform u per step and increments iff u < q. Every path of the
/// coupled_run below uses the same rule.
std::vector<std::uint64_t> urn_trajectory(const UrnSpec& spec, std::uint64_t n_steps,
                                          RandomStream& rng);

/// Terminal state plus states at the sorted `checkpoints` (each <= n_steps).
struct UrnRun {
  std::uint64_t final_state = 0;
  std::vector<std::uint64_t> at;
};
UrnRun simulate_urn(const UrnSpec& spec, std::uint64_t n_steps, RandomStream& rng,
                    const std::vector<std::uint64_t>& checkpoints = {});

/// Two urns driven by the same uniforms: each increments iff u < its own q.
struct CoupledTrajectories {
  std::vector<std::uint64_t> first;
  std::vector<std::uint64_t> second;
};
CoupledTrajectories coupled_run(const UrnSpec& first, const UrnSpec& second,
                                std::uint64_t n_steps, RandomStream& rng);

inline constexpr std::uint64_t kMaxExactUrnSteps = 40;

/// Law of R_n by forward dynamic programming; index = state value.
std::vector<double> exact_urn_distribution(const UrnSpec& spec, std::uint64_t n);

using RateFunction = std::function<double(std::uint64_t)>;

/// Exact law of the urn with increment probability A(k_A)/(A(k_A)+B(k_B)),
/// where k_A, k_B count past increments / non-increments; index = k_A.
std::vector<double> exact_rate_urn_distribution(const RateFunction& rate_a,
                                                const RateFunction& rate_b, std::uint64_t n);

/// Rubin's embedding: clock A rings at partial sums of xi_k / A(k), clock B at
/// partial sums of xi'_k / B(k) (mean-one exponentials); the sequence of
/// which clock rings next gives k_A after each of the first n rings.
/// Returns k_A(0..n).
std::vector<std::uint64_t> rubin_sampler(const RateFunction& rate_a, const RateFunction& rate_b,
                                         std::uint64_t n, RandomStream& rng);

}  // namespace antwalk
