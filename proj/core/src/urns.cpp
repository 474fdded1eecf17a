#include "antwalk/urns.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "antwalk/errors.hpp"

namespace antwalk {

double GeneralizedUrnParams::phi(std::uint64_t i) const {
  const double x = static_cast<double>(i);
  return std::max(c0, (x - b * std::pow(x, alpha)) / h);
}

double GeneralizedUrnParams::psi(std::uint64_t i) const {
  return alpha * (static_cast<double>(i) + c2) / h;
}

std::string_view to_string(UrnKind kind) noexcept {
  switch (kind) {
    case UrnKind::Polya: return "polya";
    case UrnKind::FriedmanLike: return "friedman";
    case UrnKind::Generalized: return "generalized";
    case UrnKind::JansonFifth: return "janson";
  }
  return "?";
}

UrnKind parse_urn_kind(std::string_view name) {
  for (auto k : {UrnKind::Polya, UrnKind::FriedmanLike, UrnKind::Generalized, UrnKind::JansonFifth})
    if (to_string(k) == name) return k;
  throw DomainError("unknown urn kind '" + std::string(name) + "'");
}

UrnSpec UrnSpec::polya(std::uint64_t red0, std::uint64_t black0) {
  if (red0 + black0 == 0) throw DomainError("Polya urn needs at least one ball");
  UrnSpec s;
  s.kind = UrnKind::Polya;
  s.red0 = red0;
  s.black0 = black0;
  return s;
}

UrnSpec UrnSpec::friedman_like() {
  UrnSpec s;
  s.kind = UrnKind::FriedmanLike;
  return s;
}

UrnSpec UrnSpec::generalized_urn(const GeneralizedUrnParams& params) {
  if (!(params.h > 0.0) || !(params.c0 > 0.0) || !(params.alpha > 0.0) || !(params.c2 > 0.0))
    throw DomainError("generalized urn: h, c0, alpha and c2 must be positive");
  UrnSpec s;
  s.kind = UrnKind::Generalized;
  s.generalized = params;
  return s;
}

UrnSpec UrnSpec::janson_fifth(std::uint64_t n0) {
  UrnSpec s;
  s.kind = UrnKind::JansonFifth;
  s.n0 = n0;
  return s;
}

std::uint64_t UrnSpec::initial_state() const noexcept {
  switch (kind) {
    case UrnKind::Polya: return red0;
    case UrnKind::Generalized: return 0;
    case UrnKind::FriedmanLike:
    case UrnKind::JansonFifth: return 1;
  }
  return 0;
}

double UrnSpec::increment_probability(std::uint64_t r, std::uint64_t n) const {
  if (r > initial_state() + n) throw DomainError("urn state exceeds initial state + n");
  const double x = static_cast<double>(r);
  const double t = static_cast<double>(n);
  double q = 0.0;
  switch (kind) {
    case UrnKind::Polya:
      q = x / (t + static_cast<double>(red0 + black0));
      break;
    case UrnKind::FriedmanLike: {
      const double z = x / (t + 2.0);
      q = z * (z * z + 0.5) / (z + 0.5);
      break;
    }
    case UrnKind::Generalized: {
      const double a = generalized.phi(r);
      q = a / (a + generalized.psi(n - r));
      break;
    }
    case UrnKind::JansonFifth:
      q = (x / 5.0) / (t + static_cast<double>(n0) + 2.0 - x + x / 5.0);
      break;
  }
  if (!(q >= 0.0 && q <= 1.0))
    throw DomainError("urn increment probability " + std::to_string(q) + " outside [0, 1]");
  return q;
}

std::uint64_t urn_step(const UrnSpec& spec, std::uint64_t state, std::uint64_t n,
                       RandomStream& rng) {
  return state + (rng.uniform() < spec.increment_probability(state, n) ? 1 : 0);
}

std::vector<std::uint64_t> urn_trajectory(const UrnSpec& spec, std::uint64_t n_steps,
                                          RandomStream& rng) {
  std::vector<std::uint64_t> states;
  states.reserve(n_steps + 1);
  states.push_back(spec.initial_state());
  for (std::uint64_t n = 0; n < n_steps; ++n) states.push_back(urn_step(spec, states.back(), n, rng));
  return states;
}

UrnRun simulate_urn(const UrnSpec& spec, std::uint64_t n_steps, RandomStream& rng,
                    const std::vector<std::uint64_t>& checkpoints) {
  UrnRun run;
  std::uint64_t r = spec.initial_state();
  auto next = checkpoints.begin();
  for (std::uint64_t n = 0;; ++n) {
    while (next != checkpoints.end() && *next == n) {
      run.at.push_back(r);
      ++next;
    }
    if (n == n_steps) break;
    r = urn_step(spec, r, n, rng);
  }
  run.final_state = r;
  return run;
}

CoupledTrajectories coupled_run(const UrnSpec& first, const UrnSpec& second,
                                std::uint64_t n_steps, RandomStream& rng) {
  CoupledTrajectories out;
  out.first.push_back(first.initial_state());
  out.second.push_back(second.initial_state());
  for (std::uint64_t n = 0; n < n_steps; ++n) {
    const double u = rng.uniform();
    const auto a = out.first.back(), b = out.second.back();
    out.first.push_back(a + (u < first.increment_probability(a, n) ? 1 : 0));
    out.second.push_back(b + (u < second.increment_probability(b, n) ? 1 : 0));
  }
  return out;
}

std::vector<double> exact_urn_distribution(const UrnSpec& spec, std::uint64_t n) {
  if (n > kMaxExactUrnSteps)
    throw DomainError("exact urn distribution limited to n <= " +
                      std::to_string(kMaxExactUrnSteps));
  const std::uint64_t r0 = spec.initial_state();
  std::vector<double> mass(r0 + n + 1, 0.0);
  mass[r0] = 1.0;
  for (std::uint64_t step = 0; step < n; ++step) {
    std::vector<double> next(mass.size(), 0.0);
    for (std::uint64_t r = r0; r <= r0 + step; ++r) {
      if (mass[r] == 0.0) continue;
      const double q = spec.increment_probability(r, step);
      next[r + 1] += mass[r] * q;
      next[r] += mass[r] * (1.0 - q);
    }
    mass = std::move(next);
  }
  return mass;
}

std::vector<double> exact_rate_urn_distribution(const RateFunction& rate_a,
                                                const RateFunction& rate_b, std::uint64_t n) {
  if (n > kMaxExactUrnSteps)
    throw DomainError("exact urn distribution limited to n <= " +
                      std::to_string(kMaxExactUrnSteps));
  std::vector<double> mass(n + 1, 0.0);
  mass[0] = 1.0;
  for (std::uint64_t step = 0; step < n; ++step) {
    std::vector<double> next(mass.size(), 0.0);
    for (std::uint64_t k = 0; k <= step; ++k) {
      if (mass[k] == 0.0) continue;
      const double a = rate_a(k), b = rate_b(step - k);
      if (!(a > 0.0) || !(b > 0.0)) throw DomainError("urn rates must be positive");
      const double q = a / (a + b);
      next[k + 1] += mass[k] * q;
      next[k] += mass[k] * (1.0 - q);
    }
    mass = std::move(next);
  }
  return mass;
}

std::vector<std::uint64_t> rubin_sampler(const RateFunction& rate_a, const RateFunction& rate_b,
                                         std::uint64_t n, RandomStream& rng) {
  auto rate = [](const RateFunction& f, std::uint64_t k) {
    const double r = f(k);
    if (!(r > 0.0)) throw DomainError("Rubin sampler rates must be positive");
    return r;
  };
  std::vector<std::uint64_t> k_a{0};
  k_a.reserve(n + 1);
  std::uint64_t a = 0, b = 0;
  double clock_a = rng.exponential() / rate(rate_a, 0);
  double clock_b = rng.exponential() / rate(rate_b, 0);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (clock_a < clock_b) {
      ++a;
      clock_a += rng.exponential() / rate(rate_a, a);
    } else {
      ++b;
      clock_b += rng.exponential() / rate(rate_b, b);
    }
    k_a.push_back(a);
  }
  return k_a;
}

}  // namespace antwalk
