#include <gtest/gtest.h>

#include <cmath>

#include "antwalk/errors.hpp"
#include "antwalk/rng.hpp"
#include "antwalk/stats.hpp"

using namespace antwalk;

TEST(Stats, MeanSdQuantile) {
  const std::vector<double> xs{1, 2, 3, 4};
  EXPECT_DOUBLE_EQ(mean(xs), 2.5);
  EXPECT_NEAR(sample_sd(xs), std::sqrt(5.0 / 3.0), 1e-15);
  EXPECT_DOUBLE_EQ(quantile(xs, 0.5), 2.5);
  EXPECT_DOUBLE_EQ(quantile(xs, 0.25), 1.75);
  EXPECT_DOUBLE_EQ(quantile(xs, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(quantile(xs, 1.0), 4.0);
  EXPECT_EQ(sample_sd(std::vector<double>{3.0}), 0.0);
}

TEST(Stats, KolmogorovSurvivalReferenceValues) {
  EXPECT_NEAR(kolmogorov_survival(1.0), 0.26999967167735456, 1e-12);
  EXPECT_NEAR(kolmogorov_survival(0.5), 0.9639452436648751, 1e-12);
  EXPECT_NEAR(kolmogorov_survival(1.36), 0.049485876755377876, 1e-6);
  EXPECT_NEAR(kolmogorov_survival(0.2), 1.0, 1e-12);
  EXPECT_LT(kolmogorov_survival(3.0), 1e-7);
}

TEST(Stats, KsUniform) {
  std::vector<double> grid;
  for (int i = 0; i < 1000; ++i) grid.push_back((i + 0.5) / 1000);
  const auto r = ks_uniform(grid);
  EXPECT_NEAR(r.statistic, 0.0005, 1e-12);
  EXPECT_GT(r.p_value, 0.999);
  std::vector<double> squeezed;
  for (const double x : grid) squeezed.push_back(x * x);
  EXPECT_LT(ks_uniform(squeezed).p_value, 1e-10);
  RandomStream rng(71, 0);
  std::vector<double> u;
  for (int i = 0; i < 2000; ++i) u.push_back(rng.uniform());
  EXPECT_GT(ks_uniform(u).p_value, 0.001);
}

TEST(Stats, TotalVariation) {
  const std::vector<double> p{0.5, 0.5}, q{0.25, 0.25, 0.5};
  EXPECT_DOUBLE_EQ(total_variation(p, q), 0.5);
  EXPECT_DOUBLE_EQ(total_variation(p, p), 0.0);
}

TEST(Stats, PowerLawFit) {
  std::vector<double> n, v;
  for (double x = 1; x <= 1e6; x *= 1.3) {
    n.push_back(x);
    v.push_back(3.0 * std::pow(x, 0.7));
  }
  const auto fit = decay_exponent_fit(n, v, 1e2, 1e6);
  EXPECT_NEAR(fit.slope, 0.7, 1e-12);
  EXPECT_NEAR(fit.intercept, std::log(3.0), 1e-10);
  EXPECT_LT(fit.slope_stderr, 1e-10);
  EXPECT_THROW(decay_exponent_fit(n, v, 1e5, 1e6), DomainError);
  v[v.size() - 1] = 0.0;
  EXPECT_THROW(decay_exponent_fit(n, v, 1e2, 1e6), DomainError);
}
