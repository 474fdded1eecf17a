#include "antwalk/counterexample.hpp"

#include <algorithm>
#include <cmath>

#include <boost/random/binomial_distribution.hpp>

#include "antwalk/errors.hpp"

namespace antwalk {

double counterexample_cover_probability(std::uint32_t length, const SideWeights& w) {
  if (length < 1) throw DomainError("counterexample: L must be at least 1");
  if (!(w.left >= 0.0) || !(w.right >= 0.0) || !(w.food > 0.0) || !(w.left + w.right > 0.0))
    throw DomainError("counterexample: invalid side weights");
  const std::size_t L = length;
  const double inv_l = 1.0 / static_cast<double>(L);
  const double nest_left = w.left / (w.left + w.right);
  const double nest_right = 1.0 - nest_left;
  const double total = w.left + w.right + w.food;
  const double junction_left = w.left / total;
  const double junction_right = w.right / total;

  // Probability that an excursion's maximum depth is exactly d before it
  // returns: 1/d - 1/(d+1).
  std::vector<double> exact_depth(L + 1, 0.0);
  for (std::size_t d = 1; d <= L; ++d)
    exact_depth[d] = 1.0 / static_cast<double>(d) - 1.0 / static_cast<double>(d + 1);

  // u_nest[a][b], u_junction[a][b] for a + b < L.
  std::vector<double> u_nest(L * L, 0.0), u_junction(L * L, 0.0);
  auto at = [L](std::size_t a, std::size_t b) { return a * L + b; };

  for (std::size_t s = L; s-- > 0;) {
    for (std::size_t a = 0; a <= s; ++a) {
      const std::size_t b = s - a;
      double sum_nest = 0.0;
      for (std::size_t d = a + 1; d + b <= L - 1; ++d) sum_nest += exact_depth[d] * u_nest[at(d, b)];
      double sum_junction = 0.0;
      for (std::size_t d = b + 1; a + d <= L - 1; ++d)
        sum_junction += exact_depth[d] * u_junction[at(a, d)];
      const double self_nest = 1.0 - 1.0 / static_cast<double>(a + 1);
      const double self_junction = 1.0 - 1.0 / static_cast<double>(b + 1);

      // [m11 m12; m21 m22] (u_nest, u_junction) = (r1, r2)
      const double m11 = 1.0 - nest_left * self_nest - nest_right * (1.0 - inv_l);
      const double m12 = -nest_right * inv_l;
      const double r1 = nest_left * (1.0 / static_cast<double>(L - b) + sum_nest);
      const double m21 = -junction_right * inv_l;
      const double m22 = 1.0 - junction_left * self_junction - junction_right * (1.0 - inv_l);
      const double r2 = junction_left * (1.0 / static_cast<double>(L - a) + sum_junction);
      const double det = m11 * m22 - m12 * m21;
      if (!(std::abs(det) > 0.0)) throw SolveError("counterexample: singular macro chain");
      u_nest[at(a, b)] = (r1 * m22 - m12 * r2) / det;
      u_junction[at(a, b)] = (m11 * r2 - m21 * r1) / det;
    }
  }
  return u_nest[at(0, 0)];
}

double counterexample_left_probability(std::uint32_t length, const SideWeights& w) {
  const double cover_left = counterexample_cover_probability(length, w);
  const double cover_right = counterexample_cover_probability(length, {w.right, w.left, w.food});
  return 0.5 * (1.0 + cover_left - cover_right);
}

double counterexample_p(std::uint32_t length, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("counterexample_p: x must lie in [0, 1]");
  return counterexample_left_probability(length, {x, 1.0 - x, 1.0});
}

double counterexample_drift(std::uint32_t length, double x) {
  return counterexample_p(length, x) - x;
}

namespace {

// Failures before the first success of independent trials.
std::uint64_t geometric_failures(double success, RandomStream& rng) {
  if (success >= 1.0) return 0;
  const double k = std::floor(std::log(rng.uniform_positive()) / std::log1p(-success));
  return k >= 1e18 ? std::uint64_t{1'000'000'000'000'000'000} : static_cast<std::uint64_t>(k);
}

std::uint64_t binomial(std::uint64_t trials, double p, RandomStream& rng) {
  if (trials == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return trials;
  boost::random::binomial_distribution<std::int64_t, double> dist(
      static_cast<std::int64_t>(trials), p);
  return static_cast<std::uint64_t>(dist(rng));
}

// Maximum depth reached by `count` excursions that all returned to their
// starting end of a path of length L: P(depth <= d) = (d / (d+1)) / (1 - 1/L)
// for one excursion.
std::uint32_t max_failed_depth(std::uint64_t count, std::uint32_t length, RandomStream& rng) {
  if (count == 0 || length < 2) return 0;
  const double v = std::pow(rng.uniform_positive(), 1.0 / static_cast<double>(count));
  const double t = v * (1.0 - 1.0 / static_cast<double>(length));
  const double d = std::ceil(t / (1.0 - t));
  return static_cast<std::uint32_t>(std::clamp(d, 1.0, static_cast<double>(length - 1)));
}

}  // namespace

CoverOutcome sample_counterexample_cover(std::uint32_t length, const SideWeights& w,
                                         RandomStream& rng) {
  if (length < 1) throw DomainError("counterexample: L must be at least 1");
  const double inv_l = 1.0 / static_cast<double>(length);
  const double side_total = w.left + w.right;
  const double left_share = w.left / side_total;
  const double total = side_total + w.food;
  const double food_step = w.food / total;
  const double junction_success = food_step + side_total / total * inv_l;

  std::uint32_t nest_depth_left = 0, nest_depth_right = 0;
  std::uint32_t junction_depth_left = 0, junction_depth_right = 0;
  bool crossed_left = false, crossed_right = false;
  bool at_nest = true;
  for (;;) {
    if (at_nest) {
      const std::uint64_t failures = geometric_failures(inv_l, rng);
      const std::uint64_t left = binomial(failures, left_share, rng);
      nest_depth_left = std::max(nest_depth_left, max_failed_depth(left, length, rng));
      nest_depth_right = std::max(nest_depth_right, max_failed_depth(failures - left, length, rng));
      (rng.uniform() < left_share ? crossed_left : crossed_right) = true;
      at_nest = false;
    } else {
      const std::uint64_t failures = geometric_failures(junction_success, rng);
      const std::uint64_t left = binomial(failures, left_share, rng);
      junction_depth_left = std::max(junction_depth_left, max_failed_depth(left, length, rng));
      junction_depth_right =
          std::max(junction_depth_right, max_failed_depth(failures - left, length, rng));
      if (rng.uniform() * junction_success < food_step) break;
      (rng.uniform() < left_share ? crossed_left : crossed_right) = true;
      at_nest = true;
    }
  }
  CoverOutcome out;
  out.left = crossed_left || nest_depth_left + junction_depth_left >= length;
  out.right = crossed_right || nest_depth_right + junction_depth_right >= length;
  return out;
}

CounterexampleRun run_counterexample_process(std::uint32_t length, std::uint64_t n_steps,
                                             RandomStream& rng, double alpha,
                                             const std::vector<std::uint64_t>& checkpoints) {
  if (!(alpha > 0.0)) throw DomainError("counterexample: exponent must be positive");
  CounterexampleRun run;
  auto next = checkpoints.begin();
  auto record = [&] {
    while (next != checkpoints.end() && *next == run.n) {
      run.n1_at.push_back(run.n1);
      ++next;
    }
  };
  record();
  for (std::uint64_t i = 0; i < n_steps; ++i) {
    const double food = static_cast<double>(run.n + 2);
    SideWeights w{static_cast<double>(run.n1), static_cast<double>(run.n2), food};
    if (alpha != 1.0) w = {std::pow(w.left, alpha), std::pow(w.right, alpha), std::pow(food, alpha)};
    const CoverOutcome cover = sample_counterexample_cover(length, w, rng);
    bool left = cover.left;
    if (cover.left && cover.right) left = rng.uniform() < 0.5;
    ++(left ? run.n1 : run.n2);
    ++run.n;
    record();
  }
  return run;
}

}  // namespace antwalk
