#include <algorithm>
#include <cmath>

#include "antwalk/errors.hpp"
#include "antwalk/geodesic.hpp"
#include "antwalk/losange.hpp"
#include "antwalk/stats.hpp"
#include "common.hpp"

namespace antwalk::experiment {
namespace {

constexpr std::uint64_t kTailWindow = 10'000;
constexpr std::size_t kMaxEdgesForHmax = 40;
constexpr double kBoundsSlack = 1e-9;

bool is_path_rule(RuleVariant v) {
  return v == RuleVariant::LoopErased || v == RuleVariant::UniformGeodesic ||
         v == RuleVariant::EarliestGeodesic;
}

struct SimulateReplica {
  std::vector<TrajectoryRow> rows;
  double tail_fraction = 0.0;
  std::uint64_t tail_steps = 0;
  double final_conductance = 0.0;
  std::optional<double> growth_slack, lower_slack, upper_slack;
};

}  // namespace

CommandResult run_simulate(const ExperimentConfig& config, bool check) {
  config.validate();
  const LoadedGraph loaded = load_graph(config.graph);
  const Graph& graph = loaded.graph;
  const std::size_t edges = graph.edge_count();
  const std::uint32_t hmin = h_min(graph);
  std::optional<std::uint32_t> hmax;
  if (edges <= kMaxEdgesForHmax) hmax = h_max(graph);
  const bool losange_graph =
      config.graph.source == GraphSpec::Source::Standard && config.graph.value == "losange";
  const bool check_bounds = check && hmax && is_path_rule(config.rule.variant);
  const RecordingSchedule schedule = make_schedule(config);
  const std::uint64_t tail = std::min(kTailWindow, config.steps);

  auto outcomes = run_replicas(config.replicas, config.threads, [&](std::uint32_t r) {
    RandomStream rng(config.seed, r);
    const ConductanceEvaluator evaluator(graph, loaded.expr);
    TrajectoryRecorder trajectory(schedule, evaluator, hmin);
    GeodesicWindowRecorder window(hmin, config.steps - tail + 1, config.steps);
    std::optional<ConductanceBoundsRecorder> bounds;
    std::vector<Recorder*> recorders{&trajectory, &window};
    if (check_bounds) {
      bounds.emplace(evaluator, *hmax, true);
      recorders.push_back(&*bounds);
    }
    WeightState state(edges);
    run_process(graph, config.rule, config.steps, rng, recorders, state, config.step_cap);
    SimulateReplica out;
    out.rows = trajectory.rows();
    out.tail_fraction = window.fraction();
    out.tail_steps = window.steps();
    out.final_conductance = out.rows.back().conductance;
    if (bounds) {
      out.growth_slack = bounds->min_growth_slack();
      out.lower_slack = bounds->min_increment_lower_slack();
      out.upper_slack = bounds->min_increment_upper_slack();
    }
    return out;
  });

  const auto dir = detail::prepare_out_dir(config);
  std::vector<std::string> header{"replica", "n"};
  for (std::size_t e = 0; e < edges; ++e) header.push_back("W_" + std::to_string(e));
  header.insert(header.end(), {"C_G", "geodesic", "geodesic_count"});
  {
    CsvWriter csv(dir / "trajectory.csv", header);
    for (const auto& o : outcomes) {
      if (!o.value) continue;
      for (const auto& row : o.value->rows) {
        csv.field(o.replica).field(row.n);
        for (const auto w : row.weights) csv.field(w);
        csv.field(row.conductance).field(row.geodesic).field(row.geodesic_count);
        csv.end_row();
      }
    }
  }

  auto summary = summary_header("simulate", config.to_json(), config.seed);
  summary["graph"] = {{"vertices", graph.vertex_count()},
                      {"edges", edges},
                      {"h_min", hmin},
                      {"h_max", hmax ? nlohmann::ordered_json(*hmax) : nlohmann::ordered_json()}};
  const std::size_t completed = detail::record_failures(summary, outcomes);

  const double n = static_cast<double>(config.steps);
  const double fit_lo = std::max(1.0, n / 100.0);
  CheckList checks;
  std::vector<double> conductance_over_n, tail_fraction;
  std::vector<std::vector<double>> normalized(edges), slopes(edges);
  std::uint64_t losange_rows_checked = 0, losange_rows_failed = 0;
  nlohmann::ordered_json per_replica = nlohmann::ordered_json::array();
  for (const auto& o : outcomes) {
    if (!o.value) continue;
    const auto& rep = *o.value;
    const auto& last = rep.rows.back();
    nlohmann::ordered_json j;
    j["replica"] = o.replica;
    j["final_weights"] = last.weights;
    j["conductance_over_n"] = rep.final_conductance / n;
    j["geodesic_fraction_tail"] = rep.tail_fraction;
    j["tail_steps"] = rep.tail_steps;
    conductance_over_n.push_back(rep.final_conductance / n);
    tail_fraction.push_back(rep.tail_fraction);

    nlohmann::ordered_json fits = nlohmann::ordered_json::object();
    std::vector<double> ns;
    for (const auto& row : rep.rows) ns.push_back(static_cast<double>(row.n));
    for (std::size_t e = 0; e < edges; ++e) {
      normalized[e].push_back(static_cast<double>(last.weights[e]) / n);
      std::vector<double> ws;
      for (const auto& row : rep.rows) ws.push_back(static_cast<double>(row.weights[e]));
      try {
        const PowerLawFit fit = decay_exponent_fit(ns, ws, fit_lo, n);
        fits["W_" + std::to_string(e)] = {{"slope", fit.slope},
                                          {"slope_stderr", fit.slope_stderr},
                                          {"points", fit.points}};
        slopes[e].push_back(fit.slope);
      } catch (const DomainError&) {
        fits["W_" + std::to_string(e)] = nullptr;
      }
    }
    j["fits"] = fits;
    j["fit_window"] = {fit_lo, n};
    if (losange_graph) {
      std::array<double, 5> chi{};
      for (std::size_t e = 0; e < 5; ++e)
        chi[e] = static_cast<double>(last.weights[e]) / (n + 2.0);
      j["chi_hat"] = chi;
      for (const auto& row : rep.rows) {
        ++losange_rows_checked;
        const bool ok = in_set_E_exact(row.weights, row.n);
        if (!ok) ++losange_rows_failed;
      }
    }
    if (rep.growth_slack) {
      j["bounds"] = {{"min_growth_slack", *rep.growth_slack},
                     {"min_increment_lower_slack", *rep.lower_slack},
                     {"min_increment_upper_slack", *rep.upper_slack}};
      if (check) {
        const bool ok = *rep.growth_slack >= -kBoundsSlack && *rep.lower_slack >= -kBoundsSlack &&
                        *rep.upper_slack >= -kBoundsSlack;
        checks.add("conductance_bounds_replica_" + std::to_string(o.replica), ok, j["bounds"]);
      }
    }
    per_replica.push_back(std::move(j));
  }

  nlohmann::ordered_json aggregates;
  aggregates["conductance_over_n"] = describe(conductance_over_n);
  aggregates["geodesic_fraction_tail"] = describe(tail_fraction);
  aggregates["inverse_h_min"] = 1.0 / hmin;
  nlohmann::ordered_json weights_json, slopes_json;
  for (std::size_t e = 0; e < edges; ++e) {
    weights_json["W_" + std::to_string(e)] = describe(normalized[e]);
    slopes_json["W_" + std::to_string(e)] = describe(slopes[e]);
  }
  aggregates["final_weight_over_n"] = weights_json;
  aggregates["fitted_slopes"] = slopes_json;
  summary["aggregates"] = aggregates;
  summary["per_replica"] = per_replica;

  if (losange_graph) {
    summary["losange_invariants"] = {{"rows_checked", losange_rows_checked},
                                     {"rows_failed", losange_rows_failed}};
    if (check)
      checks.add("losange_invariant_set", losange_rows_failed == 0,
                 summary["losange_invariants"]);
  }
  if (check && checks.empty())
    checks.add("replicas_completed", completed == config.replicas,
               {{"completed", completed}, {"requested", config.replicas}});

  return detail::finish(dir, std::move(summary), {(dir / "trajectory.csv").string()},
                        check ? &checks : nullptr, completed, config.replicas);
}

}  // namespace antwalk::experiment
