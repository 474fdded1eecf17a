#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "antwalk/errors.hpp"
#include "antwalk/experiment/commands.hpp"
#include "antwalk/experiment/output.hpp"

namespace ex = antwalk::experiment;

namespace {

struct Common {
  std::string config_path;
  std::optional<std::uint64_t> seed, steps, step_cap, stride;
  std::optional<std::uint32_t> replicas;
  std::optional<unsigned> threads;
  std::optional<std::string> out_dir, schedule;
  std::optional<double> ratio;
  bool check = false;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--config", c.config_path, "INI configuration file")->check(CLI::ExistingFile);
  app->add_option("--seed", c.seed, "master seed");
  app->add_option("--replicas", c.replicas, "number of independent replicas");
  app->add_option("--steps,--n", c.steps, "number of ants (process steps)");
  app->add_option("--out-dir", c.out_dir, "output directory");
  app->add_option("--threads", c.threads, "worker threads (0: all cores)");
  app->add_option("--step-cap", c.step_cap, "maximum walk length before a replica fails");
  app->add_option("--schedule", c.schedule, "recording schedule: geometric or linear");
  app->add_option("--ratio", c.ratio, "geometric schedule ratio");
  app->add_option("--stride", c.stride, "linear schedule stride");
  app->add_flag("--check", c.check, "evaluate the built-in claims; exit 4 if one fails");
}

ex::ExperimentConfig build_config(const Common& c, ex::ExperimentConfig base = {}) {
  ex::ExperimentConfig cfg = c.config_path.empty() ? base : ex::load_config(c.config_path, base);
  if (c.seed) cfg.seed = *c.seed;
  if (c.replicas) cfg.replicas = *c.replicas;
  if (c.steps) cfg.steps = *c.steps;
  if (c.step_cap) cfg.step_cap = *c.step_cap;
  if (c.threads) cfg.threads = *c.threads;
  if (c.out_dir) cfg.out_dir = *c.out_dir;
  if (c.schedule) cfg.schedule = *c.schedule;
  if (c.ratio) cfg.ratio = *c.ratio;
  if (c.stride) cfg.stride = *c.stride;
  return cfg;
}

std::vector<double> parse_list(const std::string& field, const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ex::ConfigError(field, "cannot parse '" + item + "' as a number");
    }
  }
  return values;
}

void report(const ex::CommandResult& result) {
  const auto& s = result.summary;
  if (s.contains("value")) std::cout << "conductance " << ex::format_double(s["value"]) << '\n';
  if (s.contains("point"))
    std::cout << "p-vector " << s["point"]["p_exact"].dump() << '\n';
  if (s.contains("checks")) {
    for (const auto& c : s["checks"])
      std::cout << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>()
                << '\n';
  }
  if (s.contains("replicas_completed"))
    std::cout << "replicas " << s["replicas_completed"] << '/' << s["replicas_requested"] << '\n';
  for (const auto& f : result.files) std::cout << "wrote " << f << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reinforced ant walks on graphs: simulation, conductance and exact drifts"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "antwalk 0.1.0");

  Common common;
  std::optional<std::string> graph, rule;
  std::optional<double> alpha;

  auto* simulate = app.add_subcommand("simulate", "run the ant process and record trajectories");
  add_common(simulate, common);
  simulate->add_option("--graph", graph, "losange | counterexample:L | sp:<term> | file:<path> ...");
  simulate->add_option("--rule", rule,
                       "loop-erased | uniform-geodesic | full-trace | full-trace-multiplicity | "
                       "earliest-geodesic");
  simulate->add_option("--alpha", alpha, "walk exponent: edges are sampled with weight W^alpha");

  std::optional<std::uint32_t> length, x_points;
  std::optional<double> x_min, x_max, low_threshold;
  auto* counter = app.add_subcommand("counterexample", "drift and simulation on counterexample(L)");
  add_common(counter, common);
  counter->add_option("--L,--length", length, "length of each side path");
  counter->add_option("--alpha", alpha, "walk exponent of the simulation");
  counter->add_option("--x-min", x_min);
  counter->add_option("--x-max", x_max);
  counter->add_option("--x-points", x_points);
  counter->add_option("--low-threshold", low_threshold, "N1/n level counted as vanishing");

  std::optional<double> threshold;
  auto* sub = app.add_subcommand("sublinear-superlinear",
                                 "classify surviving edges of P(e,S(e,e)) under W^alpha walks");
  add_common(sub, common);
  sub->add_option("--alpha", alpha, "walk exponent");
  sub->add_option("--threshold", threshold, "W/n level below which an edge counts as dead");
  sub->add_option("--rule", rule, "reinforcement rule");

  std::string weights_text;
  auto* cond = app.add_subcommand("conductance", "effective N-F conductance");
  add_common(cond, common);
  cond->add_option("--graph", graph, "graph specification");
  cond->add_option("--weights", weights_text, "comma-separated edge weights (default all ones)");

  std::string point_text;
  ex::LosangeRequest losange_request;
  auto* los = app.add_subcommand("losange-analytics", "exact p-vector, drift and inequality slacks");
  add_common(los, common);
  los->add_option("--point", point_text, "w1,w2,w3,w4,w5");
  los->add_option("--sweep", losange_request.sweep, "number of sampled points of the invariant set");
  los->add_option("--w3-max", losange_request.w3_max, "largest w3 in the sweep");
  los->add_option("--rho", losange_request.rho);
  los->add_option("--epsilon", losange_request.epsilon, "w3 range of the (1-rho) w3 bound; 0 skips");

  std::optional<std::string> kind;
  std::optional<std::uint64_t> red0, black0, n0;
  std::optional<double> b, urn_alpha, h, c0, c2, fit_min, fit_max;
  auto* urn = app.add_subcommand("urn", "urn simulations");
  add_common(urn, common);
  urn->add_option("--kind", kind, "polya | friedman | generalized | janson");
  urn->add_option("--red0", red0);
  urn->add_option("--black0", black0);
  urn->add_option("--n0", n0, "index shift of the Janson urn");
  urn->add_option("--b", b);
  urn->add_option("--urn-alpha", urn_alpha);
  urn->add_option("--branch-hmin", h, "h_min of the shorter branch");
  urn->add_option("--c0", c0);
  urn->add_option("--c2", c2);
  urn->add_option("--fit-min", fit_min);
  urn->add_option("--fit-max", fit_max);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ex::kExitOk : ex::kExitConfig;
  }

  try {
    ex::ExperimentConfig cfg = build_config(common);
    if (rule) {
      try {
        cfg.rule.variant = antwalk::parse_rule_variant(*rule);
      } catch (const antwalk::Error& e) {
        throw ex::ConfigError("rule.variant", e.what());
      }
    }
    ex::CommandResult result;
    if (*simulate) {
      if (graph) cfg.graph = ex::GraphSpec::parse(*graph);
      if (alpha) cfg.rule.walk_exponent = *alpha;
      cfg.validate();
      result = ex::run_simulate(cfg, common.check);
    } else if (*counter) {
      if (length) cfg.counterexample.length = *length;
      if (alpha) cfg.counterexample.alpha = *alpha;
      if (x_min) cfg.counterexample.x_min = *x_min;
      if (x_max) cfg.counterexample.x_max = *x_max;
      if (x_points) cfg.counterexample.x_points = *x_points;
      if (low_threshold) cfg.counterexample.low_threshold = *low_threshold;
      result = ex::run_counterexample(cfg, common.check);
    } else if (*sub) {
      if (alpha) cfg.sublinear.alpha = *alpha;
      if (threshold) cfg.sublinear.threshold = *threshold;
      result = ex::run_sublinear(cfg, common.check);
    } else if (*cond) {
      if (graph) cfg.graph = ex::GraphSpec::parse(*graph);
      std::vector<double> weights;
      if (!weights_text.empty()) weights = parse_list("weights", weights_text);
      result = ex::run_conductance(cfg, weights, common.check);
    } else if (*los) {
      if (!point_text.empty()) {
        const auto values = parse_list("point", point_text);
        if (values.size() != 5) throw ex::ConfigError("point", "expected five coordinates");
        losange_request.point.emplace();
        std::copy(values.begin(), values.end(), losange_request.point->begin());
      }
      result = ex::run_losange_analytics(cfg, losange_request, common.check);
    } else if (*urn) {
      if (kind) {
        try {
          cfg.urn.kind = antwalk::parse_urn_kind(*kind);
        } catch (const antwalk::Error& e) {
          throw ex::ConfigError("urn.kind", e.what());
        }
      }
      if (red0) cfg.urn.red0 = *red0;
      if (black0) cfg.urn.black0 = *black0;
      if (n0) cfg.urn.n0 = *n0;
      if (b) cfg.urn.generalized.b = *b;
      if (urn_alpha) cfg.urn.generalized.alpha = *urn_alpha;
      if (h) cfg.urn.generalized.h = *h;
      if (c0) cfg.urn.generalized.c0 = *c0;
      if (c2) cfg.urn.generalized.c2 = *c2;
      if (fit_min) cfg.urn.fit_min = *fit_min;
      if (fit_max) cfg.urn.fit_max = *fit_max;
      result = ex::run_urn(cfg, common.check);
    }
    report(result);
    return result.exit_code;
  } catch (const ex::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return ex::kExitConfig;
  } catch (const antwalk::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ex::kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ex::kExitUsage;
  }
}
