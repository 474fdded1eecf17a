#include <cmath>

#include "antwalk/errors.hpp"
#include "antwalk/stats.hpp"
#include "antwalk/urns.hpp"
#include "common.hpp"

namespace antwalk::experiment {
namespace {

constexpr double kFriedmanThreshold = 0.02;
constexpr double kFriedmanFraction = 0.95;
constexpr double kKsLevel = 0.01;
constexpr double kJansonLow = 0.15;
constexpr double kJansonHigh = 0.25;

UrnSpec make_spec(const UrnOptions& o) {
  switch (o.kind) {
    case UrnKind::Polya: return UrnSpec::polya(o.red0, o.black0);
    case UrnKind::FriedmanLike: return UrnSpec::friedman_like();
    case UrnKind::Generalized: return UrnSpec::generalized_urn(o.generalized);
    case UrnKind::JansonFifth: return UrnSpec::janson_fifth(o.n0);
  }
  return UrnSpec::polya();
}

}  // namespace

CommandResult run_urn(const ExperimentConfig& config, bool check) {
  config.validate();
  const UrnOptions& opt = config.urn;
  const UrnSpec spec = make_spec(opt);
  std::vector<std::uint64_t> checkpoints;
  const RecordingSchedule schedule = make_schedule(config);
  for (const auto p : schedule.points())
    if (p > 0) checkpoints.push_back(p);

  auto outcomes = run_replicas(config.replicas, config.threads, [&](std::uint32_t r) {
    RandomStream rng(config.seed, r);
    return simulate_urn(spec, config.steps, rng, checkpoints);
  });

  const auto dir = detail::prepare_out_dir(config);
  {
    const std::vector<std::string> header{"replica", "n", "R"};
    CsvWriter csv(dir / "urn.csv", header);
    for (const auto& o : outcomes) {
      if (!o.value) continue;
      for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        csv.field(o.replica).field(checkpoints[i]).field(o.value->at[i]);
        csv.end_row();
      }
    }
  }

  auto summary = summary_header("urn", config.to_json(), config.seed);
  const std::size_t completed = detail::record_failures(summary, outcomes);
  const double n = static_cast<double>(config.steps);
  std::vector<double> ratio;
  for (const auto& o : outcomes)
    if (o.value) ratio.push_back(static_cast<double>(o.value->final_state) / n);
  nlohmann::ordered_json aggregates;
  aggregates["R_over_n"] = describe(ratio);

  // Mean trajectory across replicas, for the growth exponent.
  std::vector<double> ns, mean_r, mean_gap;
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    double sum = 0.0;
    for (const auto& o : outcomes)
      if (o.value) sum += static_cast<double>(o.value->at[i]);
    const double m = completed ? sum / completed : 0.0;
    ns.push_back(static_cast<double>(checkpoints[i]));
    mean_r.push_back(m);
    mean_gap.push_back(static_cast<double>(checkpoints[i]) - m);
  }
  auto fit_json = [&](const std::vector<double>& values) -> nlohmann::ordered_json {
    try {
      const PowerLawFit fit = decay_exponent_fit(ns, values, opt.fit_min, opt.fit_max);
      return {{"slope", fit.slope}, {"slope_stderr", fit.slope_stderr}, {"points", fit.points},
              {"window", {opt.fit_min, opt.fit_max}}};
    } catch (const DomainError& e) {
      return {{"error", e.what()}};
    }
  };

  CheckList checks;
  switch (opt.kind) {
    case UrnKind::Polya: {
      std::vector<double> fraction;
      const double total0 = static_cast<double>(opt.red0 + opt.black0);
      for (const auto& o : outcomes)
        if (o.value) fraction.push_back(static_cast<double>(o.value->final_state) / (n + total0));
      aggregates["terminal_fraction"] = describe(fraction);
      if (!fraction.empty()) {
        const KsResult ks = ks_uniform(fraction);
        aggregates["ks_uniform"] = {{"statistic", ks.statistic}, {"p_value", ks.p_value}};
        if (check && opt.red0 == 1 && opt.black0 == 1)
          checks.add("polya_uniform_limit", ks.p_value >= kKsLevel, aggregates["ks_uniform"]);
      }
      break;
    }
    case UrnKind::FriedmanLike: {
      std::size_t below = 0;
      for (const double x : ratio)
        if (x < kFriedmanThreshold) ++below;
      const double frac = completed ? static_cast<double>(below) / completed : 0.0;
      aggregates["fraction_below_threshold"] = {{"threshold", kFriedmanThreshold},
                                                {"count", below},
                                                {"fraction", frac}};
      aggregates["mean_R_fit"] = fit_json(mean_r);
      if (check)
        checks.add("friedman_vanishing_fraction", frac >= kFriedmanFraction,
                   aggregates["fraction_below_threshold"]);
      break;
    }
    case UrnKind::JansonFifth: {
      aggregates["mean_R_fit"] = fit_json(mean_r);
      if (check) {
        const auto& fit = aggregates["mean_R_fit"];
        const bool ok = fit.contains("slope") && fit["slope"].get<double>() >= kJansonLow &&
                        fit["slope"].get<double>() <= kJansonHigh;
        checks.add("janson_growth_exponent", ok, fit);
      }
      break;
    }
    case UrnKind::Generalized:
      aggregates["mean_gap_fit"] = fit_json(mean_gap);
      break;
  }
  summary["aggregates"] = aggregates;
  return detail::finish(dir, std::move(summary), {(dir / "urn.csv").string()},
                        check ? &checks : nullptr, completed, config.replicas);
}

}  // namespace antwalk::experiment
