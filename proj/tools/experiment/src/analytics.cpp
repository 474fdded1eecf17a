#include <algorithm>
#include <cmath>
#include <map>

#include "antwalk/conductance.hpp"
#include "antwalk/errors.hpp"
#include "antwalk/losange.hpp"
#include "common.hpp"

namespace antwalk::experiment {
namespace {

constexpr double kAgreement = 1e-9;

const char* status_name(InequalityResult::Status s) {
  switch (s) {
    case InequalityResult::Status::Pass: return "pass";
    case InequalityResult::Status::Fail: return "fail";
    case InequalityResult::Status::Skipped: return "skipped";
  }
  return "skipped";
}

nlohmann::ordered_json p_json(const ReinforcementProbabilities& p) {
  return {{"p12", p.p12}, {"p45", p.p45}, {"p135", p.p135}, {"p234", p.p234}, {"sum", p.sum()}};
}

template <typename F>
nlohmann::ordered_json guarded(F f) {
  try {
    return f();
  } catch (const DomainError&) {
    return nullptr;
  }
}

}  // namespace

CommandResult run_conductance(const ExperimentConfig& config, const std::vector<double>& weights,
                              bool check) {
  config.validate();
  const LoadedGraph loaded = load_graph(config.graph);
  const Graph& graph = loaded.graph;
  std::vector<double> w = weights;
  if (w.empty()) w.assign(graph.edge_count(), 1.0);
  if (w.size() != graph.edge_count())
    throw ConfigError("weights", "expected " + std::to_string(graph.edge_count()) +
                                     " values, got " + std::to_string(w.size()));
  for (const double x : w)
    if (!(x > 0.0) || !std::isfinite(x)) throw ConfigError("weights", "weights must be positive");

  const ConductanceReport laplacian = laplacian_conductance(graph, w);
  auto summary = summary_header("conductance", config.to_json(), config.seed);
  summary["weights"] = w;
  summary["laplacian"] = {{"value", laplacian.value}, {"residual", laplacian.residual}};
  double value = laplacian.value;
  std::string method(to_string(ConductanceMethod::Laplacian));
  CheckList checks;
  if (loaded.expr) {
    const double sp = sp_conductance(*loaded.expr, w);
    const double rel = std::abs(sp - laplacian.value) / std::max(std::abs(sp), 1e-300);
    summary["sp_reduction"] = {{"value", sp}, {"relative_difference", rel}};
    value = sp;
    method = to_string(ConductanceMethod::SpReduction);
    if (check) checks.add("sp_matches_laplacian", rel <= kAgreement, {{"relative_difference", rel}});
  }
  summary["value"] = value;
  summary["method"] = method;
  const auto dir = detail::prepare_out_dir(config);
  return detail::finish(dir, std::move(summary), {}, check ? &checks : nullptr, 0, 0);
}

CommandResult run_losange_analytics(const ExperimentConfig& config, const LosangeRequest& request,
                                    bool check) {
  config.validate();
  if (!request.point && request.sweep == 0)
    throw ConfigError("losange", "give either a point or a sweep size");
  InequalityOptions options;
  options.rho = request.rho;
  options.epsilon = request.epsilon;

  auto summary = summary_header("losange-analytics", config.to_json(), config.seed);
  summary["rho"] = request.rho;
  summary["epsilon"] = request.epsilon;
  const auto dir = detail::prepare_out_dir(config);
  std::vector<std::string> files;
  CheckList checks;

  if (request.point) {
    LosangeWeights w;
    w.w = *request.point;
    for (const double x : w.w)
      if (!(x >= 0.0 && x <= 1.0)) throw ConfigError("point", "coordinates must lie in [0, 1]");
    nlohmann::ordered_json point;
    point["w"] = w.w;
    point["in_set_E"] = in_set_E(w, 1e-12);
    const ReinforcementProbabilities p = p_vector_exact(w);
    point["p_exact"] = p_json(p);
    point["closed_forms"] = {
        {"p135", guarded([&] { return nlohmann::ordered_json(p135_closed_form(w)); })},
        {"p234", guarded([&] { return nlohmann::ordered_json(p234_closed_form(w)); })},
        {"p12_plus_p234",
         guarded([&] { return nlohmann::ordered_json(p12_plus_p234_closed_form(w)); })},
        {"F2", guarded([&] { return nlohmann::ordered_json(F2_closed_form(w)); })}};
    point["drift_F"] = drift_F(w, p);
    nlohmann::ordered_json ineq = nlohmann::ordered_json::array();
    for (const auto& r : inequality_suite(w, options)) {
      ineq.push_back({{"name", r.name}, {"status", status_name(r.status)},
                      {"lhs", r.lhs}, {"rhs", r.rhs}, {"slack", r.slack}});
      if (check && r.status != InequalityResult::Status::Skipped)
        checks.add("point_" + r.name, r.status == InequalityResult::Status::Pass,
                   {{"slack", r.slack}});
    }
    point["inequalities"] = ineq;
    summary["point"] = point;
  }

  if (request.sweep > 0) {
    RandomStream rng(config.seed, 0);
    const std::vector<std::string> names{"W3", "p135p234", "F2", "F4F5F3"};
    std::vector<std::string> header{"index", "w1", "w2", "w3", "w4", "w5",
                                    "p12", "p45", "p135", "p234"};
    for (const auto& name : names) {
      header.push_back(name + "_status");
      header.push_back(name + "_slack");
    }
    std::map<std::string, std::array<std::size_t, 3>> tally;
    std::map<std::string, double> min_slack;
    const auto path = dir / "losange_sweep.csv";
    CsvWriter csv(path, header);
    for (std::uint32_t i = 0; i < request.sweep; ++i) {
      const LosangeWeights w = sample_set_E(rng, request.w3_max);
      const ReinforcementProbabilities p = p_vector_exact(w);
      csv.field(i);
      for (const double x : w.w) csv.field(x);
      csv.field(p.p12).field(p.p45).field(p.p135).field(p.p234);
      const auto results = inequality_suite(w, options);
      for (const auto& name : names) {
        const auto it = std::find_if(results.begin(), results.end(),
                                     [&](const InequalityResult& r) { return r.name == name; });
        if (it == results.end()) {
          csv.field(std::string_view("skipped")).field(std::string_view(""));
          ++tally[name][2];
          continue;
        }
        csv.field(std::string_view(status_name(it->status)));
        if (it->status == InequalityResult::Status::Skipped) {
          csv.field(std::string_view(""));
        } else {
          csv.field(it->slack);
          auto [m, fresh] = min_slack.emplace(name, it->slack);
          if (!fresh) m->second = std::min(m->second, it->slack);
        }
        ++tally[name][static_cast<std::size_t>(it->status)];
      }
      csv.end_row();
    }
    files.push_back(path.string());
    nlohmann::ordered_json sweep;
    sweep["points"] = request.sweep;
    sweep["w3_max"] = request.w3_max;
    for (const auto& name : names) {
      const auto& t = tally[name];
      const auto m = min_slack.find(name);
      sweep["inequalities"][name] = {
          {"pass", t[0]}, {"fail", t[1]}, {"skipped", t[2]},
          {"min_slack", m == min_slack.end() ? nlohmann::ordered_json() : nlohmann::ordered_json(m->second)}};
      if (check) checks.add("sweep_" + name, t[1] == 0, sweep["inequalities"][name]);
    }
    summary["sweep"] = sweep;
  }
  return detail::finish(dir, std::move(summary), std::move(files), check ? &checks : nullptr, 0, 0);
}

}  // namespace antwalk::experiment
