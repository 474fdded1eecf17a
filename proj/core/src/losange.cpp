#include "antwalk/losange.hpp"

#include <algorithm>
#include <cmath>

#include "antwalk/conductance.hpp"
#include "antwalk/errors.hpp"
#include "antwalk/standard_graphs.hpp"

namespace antwalk {

using namespace losange_edge;

LosangeWeights LosangeWeights::from_state(const WeightState& state) {
  if (state.edge_count() != 5) throw DomainError("losange state needs 5 edges");
  const double scale = static_cast<double>(state.n() + 2);
  LosangeWeights out;
  for (std::size_t k = 0; k < 5; ++k) out.w[k] = static_cast<double>(state[k]) / scale;
  return out;
}

LosangeWeights swap(const LosangeWeights& w) { return {{w[3], w[4], w[2], w[0], w[1]}}; }

bool in_set_E(const LosangeWeights& w, double tol) {
  return std::abs(w[0] + w[3] - 1.0) <= tol && std::abs(w[1] + w[4] - 1.0) <= tol &&
         std::abs(w[0] - w[1]) <= w[2] + tol && std::abs(w[4] - w[3]) <= w[2] + tol &&
         w[0] + w[1] + tol >= w[2] && w[3] + w[4] + tol >= w[2];
}

bool in_set_E_exact(const WeightState& state) { return in_set_E_exact(state.weights(), state.n()); }

bool in_set_E_exact(std::span<const std::uint64_t> w, std::uint64_t n) {
  if (w.size() != 5) return false;
  const auto s = n + 2;
  const auto w1 = w[0], w2 = w[1], w3 = w[2], w4 = w[3], w5 = w[4];
  auto absdiff = [](std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; };
  return w1 + w4 == s && w2 + w5 == s && absdiff(w1, w2) <= w3 && absdiff(w5, w4) <= w3 &&
         w1 + w2 >= w3 && w4 + w5 >= w3;
}

std::optional<LosangeScenario> classify_scenario(const ReinforcedPath& path) {
  unsigned mask = 0;
  for (const EdgeId e : path.edges) {
    if (e >= 5) return std::nullopt;
    if (mask & (1u << e)) return std::nullopt;
    mask |= 1u << e;
  }
  switch (mask) {
    case 0b00011: return LosangeScenario::P12;
    case 0b11000: return LosangeScenario::P45;
    case 0b10101: return LosangeScenario::P135;
    case 0b01110: return LosangeScenario::P234;
    default: return std::nullopt;
  }
}

double ReinforcementProbabilities::of(LosangeScenario s) const noexcept {
  switch (s) {
    case LosangeScenario::P12: return p12;
    case LosangeScenario::P45: return p45;
    case LosangeScenario::P135: return p135;
    case LosangeScenario::P234: return p234;
  }
  return 0.0;
}

double p135_closed_form(const LosangeWeights& w) {
  const double den = (w[1] + w[2] + w[0] * w[3]) * (w[3] + w[4]) + w[1] * w[2] + w[0] * w[2] * w[3];
  if (!(den > 0.0)) throw DomainError("p135 closed form: vanishing denominator");
  return w[0] * w[2] * w[4] / den;
}

double p234_closed_form(const LosangeWeights& w) { return p135_closed_form(swap(w)); }

double p12_plus_p234_closed_form(const LosangeWeights& w) {
  const double den = w[2] + w[1] * w[4] + w[0] * w[3];
  if (!(den > 0.0)) throw DomainError("p12 + p234 closed form: vanishing denominator");
  return (w[1] * w[2] + w[0] * w[1] * w[4] + w[0] * w[1] * w[3]) / den;
}

double F2_closed_form(const LosangeWeights& w) {
  const double den = w[2] + w[1] * w[4] + w[0] * w[3];
  if (!(den > 0.0)) throw DomainError("F2 closed form: vanishing denominator");
  return (w[0] - w[1]) * w[1] * w[4] / den;
}

namespace {

// Probability that the walk from N enters F through `last`, optionally
// without ever crossing `avoid`. F is split into one copy per incident edge
// and the avoided edge is cut into two dead ends, so both events become plain
// absorptions.
double entry_probability(const LosangeWeights& w, EdgeId last, std::optional<EdgeId> avoid) {
  if (!(w[last] > 0.0)) return 0.0;
  enum : VertexId { kN, kL, kR, kFoodViaLeft, kFoodViaRight, kCutA, kCutB };
  const auto& base = losange();
  std::vector<Endpoints> edges;
  std::vector<double> weights;
  std::vector<VertexId> dead;
  auto map_vertex = [&](VertexId v, EdgeId e) -> VertexId {
    if (v == losange_vertex::kNest) return kN;
    if (v == losange_vertex::kLeft) return kL;
    if (v == losange_vertex::kRight) return kR;
    return e == kLeftFood ? kFoodViaLeft : kFoodViaRight;
  };
  for (EdgeId e = 0; e < 5; ++e) {
    const auto [u, v] = base.endpoints(e);
    if (avoid && *avoid == e) {
      edges.push_back({map_vertex(u, e), kCutA});
      edges.push_back({map_vertex(v, e), kCutB});
      weights.push_back(w[e]);
      weights.push_back(w[e]);
    } else {
      edges.push_back({map_vertex(u, e), map_vertex(v, e)});
      weights.push_back(w[e]);
    }
  }
  const std::size_t vertex_count = avoid ? 7 : 5;
  const Graph g(vertex_count, std::move(edges), kN, kFoodViaLeft);
  const VertexId target = last == kLeftFood ? kFoodViaLeft : kFoodViaRight;
  std::vector<VertexId> absorbing_other{last == kLeftFood ? kFoodViaRight : kFoodViaLeft};
  if (avoid) {
    absorbing_other.push_back(kCutA);
    absorbing_other.push_back(kCutB);
  }
  try {
    return hitting_probability(g, weights, kN, std::span(&target, 1), absorbing_other);
  } catch (const GraphError&) {
    throw DomainError("p_vector_exact: food unreachable with these weights");
  }
}

}  // namespace

ReinforcementProbabilities p_vector_exact(const LosangeWeights& w) {
  for (double x : w.w)
    if (!(x >= 0.0)) throw DomainError("p_vector_exact: weights must be non-negative");
  ReinforcementProbabilities p;
  const double via_left = entry_probability(w, kLeftFood, std::nullopt);
  const double via_right = entry_probability(w, kRightFood, std::nullopt);
  p.p135 = entry_probability(w, kRightFood, kNestRight);
  p.p234 = entry_probability(w, kLeftFood, kNestLeft);
  p.p12 = via_left - p.p234;
  p.p45 = via_right - p.p135;
  return p;
}

std::array<double, 5> scenario_vector(LosangeScenario s) {
  switch (s) {
    case LosangeScenario::P12: return {1, 1, 0, 0, 0};
    case LosangeScenario::P45: return {0, 0, 0, 1, 1};
    case LosangeScenario::P135: return {1, 0, 1, 0, 1};
    case LosangeScenario::P234: return {0, 1, 1, 1, 0};
  }
  return {};
}

std::array<double, 5> drift_F(const LosangeWeights& w, const ReinforcementProbabilities& p) {
  std::array<double, 5> f{};
  for (auto s : {LosangeScenario::P12, LosangeScenario::P45, LosangeScenario::P135,
                 LosangeScenario::P234}) {
    const auto v = scenario_vector(s);
    for (std::size_t k = 0; k < 5; ++k) f[k] += p.of(s) * v[k];
  }
  for (std::size_t k = 0; k < 5; ++k) f[k] -= w[k];
  return f;
}

std::array<double, 5> drift_F(const LosangeWeights& w) { return drift_F(w, p_vector_exact(w)); }

std::array<double, 5> martingale_increment(const LosangeWeights& w,
                                           const std::array<double, 5>& y) {
  const auto f = drift_F(w);
  std::array<double, 5> dm{};
  for (std::size_t k = 0; k < 5; ++k) dm[k] = y[k] - f[k] - w[k];
  return dm;
}

std::vector<InequalityResult> inequality_suite(const LosangeWeights& w,
                                               const InequalityOptions& options) {
  using Status = InequalityResult::Status;
  const auto p = p_vector_exact(w);
  const auto f = drift_F(w, p);
  const double w3 = w[2], w5 = w[4];
  const double tol = options.tolerance;
  std::vector<InequalityResult> out;

  auto upper = [&](std::string name, double lhs, double rhs) {
    out.push_back({std::move(name), lhs <= rhs + tol ? Status::Pass : Status::Fail, lhs, rhs,
                   rhs - lhs});
  };
  auto lower = [&](std::string name, double lhs, double rhs) {
    out.push_back({std::move(name), lhs + tol >= rhs ? Status::Pass : Status::Fail, lhs, rhs,
                   lhs - rhs});
  };
  auto skipped = [&](std::string name) {
    out.push_back({std::move(name), Status::Skipped, 0.0, 0.0, 0.0});
  };

  upper("W3", p.p135 + p.p234, w3 * (w3 * w3 + 0.5) / (w3 + 0.5));
  if (options.epsilon > 0.0 && w3 <= options.epsilon)
    upper("p135p234", p.p135 + p.p234, (1.0 - options.rho) * w3);
  else
    skipped("p135p234");
  upper("F2", std::abs(f[1]), w3 / 2.0);
  if (w5 <= 0.5)
    lower("F4F5F3", f[3] + f[4] - f[2], -8.0 * (w3 * w3 + w5 * w5));
  else
    skipped("F4F5F3");
  return out;
}

LosangeWeights sample_set_E(RandomStream& rng, double w3_max) {
  if (!(w3_max > 0.0) || w3_max > 1.0) throw DomainError("sample_set_E: w3_max must be in (0, 1]");
  constexpr std::uint64_t kGrid = std::uint64_t{1} << 52;
  const double unit = std::ldexp(1.0, -52);
  const auto w3_steps = static_cast<std::uint64_t>(std::floor(w3_max * static_cast<double>(kGrid)));
  for (;;) {
    LosangeWeights w;
    w[0] = static_cast<double>(rng.below(kGrid + 1)) * unit;
    w[1] = static_cast<double>(rng.below(kGrid + 1)) * unit;
    w[2] = static_cast<double>(rng.below(w3_steps + 1)) * unit;
    w[3] = 1.0 - w[0];
    w[4] = 1.0 - w[1];
    if (in_set_E(w, 0.0)) return w;
  }
}

double estimate_p135p234_epsilon(double rho, RandomStream& rng, std::size_t samples_per_probe,
                                 int iterations) {
  auto holds_up_to = [&](double eps) {
    for (std::size_t i = 0; i < samples_per_probe; ++i) {
      const LosangeWeights w = sample_set_E(rng, eps);
      if (w[2] == 0.0) continue;
      const auto p = p_vector_exact(w);
      if (p.p135 + p.p234 > (1.0 - rho) * w[2]) return false;
    }
    return true;
  };
  if (holds_up_to(1.0)) return 1.0;
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= 0.0) break;
    (holds_up_to(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace antwalk
