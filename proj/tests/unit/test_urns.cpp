#include <gtest/gtest.h>

#include <cmath>

#include "antwalk/errors.hpp"
#include "antwalk/stats.hpp"
#include "antwalk/urns.hpp"

using namespace antwalk;

namespace {

// Law of R_n by enumerating all 2^n draw sequences.
std::vector<double> brute_force_law(const UrnSpec& spec, std::uint64_t n) {
  std::vector<double> law(spec.initial_state() + n + 1, 0.0);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    double p = 1.0;
    std::uint64_t r = spec.initial_state();
    for (std::uint64_t k = 0; k < n && p > 0.0; ++k) {
      const double q = spec.increment_probability(r, k);
      if (bits >> k & 1) {
        p *= q;
        ++r;
      } else {
        p *= 1 - q;
      }
    }
    law[r] += p;
  }
  return law;
}

}  // namespace

TEST(UrnSpec, IncrementProbabilities) {
  EXPECT_DOUBLE_EQ(UrnSpec::polya(1, 1).increment_probability(1, 0), 0.5);
  EXPECT_DOUBLE_EQ(UrnSpec::polya(2, 1).increment_probability(3, 2), 0.6);
  const double z = 0.5;
  EXPECT_NEAR(UrnSpec::friedman_like().increment_probability(1, 0), z * (z * z + 0.5) / (z + 0.5),
              1e-15);
  EXPECT_NEAR(UrnSpec::janson_fifth().increment_probability(1, 0), 0.2 / (2 - 1 + 0.2), 1e-15);
  EXPECT_EQ(UrnSpec::friedman_like().initial_state(), 1u);
  EXPECT_EQ(UrnSpec::generalized_urn({}).initial_state(), 0u);
}

TEST(UrnSpec, GeneralizedRates) {
  GeneralizedUrnParams p;
  p.b = 1.0;
  p.alpha = 0.5;
  p.h = 2.0;
  p.c0 = 0.5;
  p.c2 = 3.0;
  EXPECT_DOUBLE_EQ(p.phi(0), 0.5);
  EXPECT_DOUBLE_EQ(p.phi(100), (100.0 - 10.0) / 2.0);
  EXPECT_DOUBLE_EQ(p.psi(5), 0.5 * 8.0 / 2.0);
}

TEST(ExactLaw, PolyaIsUniform) {
  const auto law = exact_urn_distribution(UrnSpec::polya(1, 1), 30);
  for (std::uint64_t r = 1; r <= 31; ++r) EXPECT_NEAR(law[r], 1.0 / 31, 1e-13);
  EXPECT_EQ(law[0], 0.0);
}

TEST(ExactLaw, MatchesEnumeration) {
  GeneralizedUrnParams g;
  for (const UrnSpec& spec : {UrnSpec::polya(2, 3), UrnSpec::friedman_like(),
                              UrnSpec::janson_fifth(2), UrnSpec::generalized_urn(g)}) {
    const auto dp = exact_urn_distribution(spec, 12);
    const auto brute = brute_force_law(spec, 12);
    ASSERT_LE(brute.size(), dp.size() + 1);
    for (std::size_t r = 0; r < brute.size(); ++r)
      EXPECT_NEAR(r < dp.size() ? dp[r] : 0.0, brute[r], 1e-13) << to_string(spec.kind) << " r " << r;
  }
  EXPECT_THROW(exact_urn_distribution(UrnSpec::polya(), kMaxExactUrnSteps + 1), DomainError);
}

TEST(ExactLaw, RateUrnAgreesWithSpec) {
  const auto rate = exact_rate_urn_distribution([](std::uint64_t k) { return k + 1.0; },
                                                [](std::uint64_t k) { return k + 1.0; }, 20);
  const auto polya = exact_urn_distribution(UrnSpec::polya(1, 1), 20);
  for (std::uint64_t k = 0; k <= 20; ++k) EXPECT_NEAR(rate[k], polya[k + 1], 1e-13);
}

TEST(Rubin, MatchesExactLaw) {
  const RateFunction a = [](std::uint64_t k) { return std::pow(k + 1.0, 1.5); };
  const RateFunction b = [](std::uint64_t k) { return 2.0 * (k + 1.0); };
  const std::uint64_t n = 12;
  const auto exact = exact_rate_urn_distribution(a, b, n);
  RandomStream rng(61, 0);
  std::vector<double> freq(n + 1, 0.0);
  const int samples = 50000;
  for (int i = 0; i < samples; ++i) {
    const auto path = rubin_sampler(a, b, n, rng);
    ASSERT_EQ(path.size(), n + 1);
    ASSERT_EQ(path.front(), 0u);
    freq[path.back()] += 1.0 / samples;
  }
  EXPECT_LT(total_variation(freq, exact), 0.02);
}

TEST(Simulation, TrajectoryShapeAndDeterminism) {
  RandomStream a(62, 0), b(62, 0);
  const auto t = urn_trajectory(UrnSpec::friedman_like(), 1000, a);
  ASSERT_EQ(t.size(), 1001u);
  for (std::size_t i = 1; i < t.size(); ++i) ASSERT_LE(t[i] - t[i - 1], 1u);
  const auto run = simulate_urn(UrnSpec::friedman_like(), 1000, b, {10, 1000});
  EXPECT_EQ(run.final_state, t.back());
  EXPECT_EQ(run.at, (std::vector<std::uint64_t>{t[10], t[1000]}));
}

TEST(Simulation, CouplingIsMonotone) {
  // Janson's increment probability never exceeds Polya's from a common state
  // count, so the coupled Janson urn stays below the Polya urn with the same
  // initial composition.
  RandomStream rng(63, 0);
  const auto c = coupled_run(UrnSpec::janson_fifth(0), UrnSpec::polya(1, 1), 5000, rng);
  for (std::size_t i = 0; i < c.first.size(); ++i) ASSERT_LE(c.first[i], c.second[i]);
}

TEST(Simulation, PolyaTerminalFractionIsUniform) {
  RandomStream rng(64, 0);
  std::vector<double> xs;
  for (int r = 0; r < 500; ++r) {
    RandomStream s(64, r);
    xs.push_back(simulate_urn(UrnSpec::polya(), 2000, s).final_state / 2002.0);
  }
  EXPECT_GT(ks_uniform(xs).p_value, 0.001);
}
