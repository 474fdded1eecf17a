#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace antwalk {

double mean(std::span<const double> xs);
/// Sample standard deviation (n - 1 denominator); 0 for fewer than 2 values.
double sample_sd(std::span<const double> xs);
/// Linear interpolation between order statistics (type 7), q in [0, 1].
double quantile(std::vector<double> xs, double q);

struct KsResult {
  double statistic = 0.0;  // sup |F_n - F|
  double p_value = 1.0;
};

/// One-sample Kolmogorov-Smirnov test against Uniform(0, 1). The p-value
/// uses the asymptotic Kolmogorov series with Stephens' small-sample
/// correction.
KsResult ks_uniform(std::vector<double> xs);

/// Kolmogorov survival function Q(lambda) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 lambda^2).
double kolmogorov_survival(double lambda);

/// (1/2) sum |p_i - q_i|; shorter vector padded with zeros.
double total_variation(std::span<const double> p, std::span<const double> q);

struct PowerLawFit {
  double slope = 0.0;
  double intercept = 0.0;     // of log(value) against log(n)
  double slope_stderr = 0.0;
  std::size_t points = 0;
};

/// Least-squares fit of log(value) on log(n) over points with
/// n_min <= n <= n_max. Throws DomainError with fewer than 10 points in the
/// window or a non-positive value.
PowerLawFit decay_exponent_fit(std::span<const double> n, std::span<const double> value,
                               double n_min, double n_max);

}  // namespace antwalk
