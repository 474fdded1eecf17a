#include "antwalk/experiment/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "antwalk/errors.hpp"
#include "antwalk/graph_io.hpp"
#include "antwalk/standard_graphs.hpp"

namespace antwalk::experiment {

GraphSpec GraphSpec::parse(const std::string& text) {
  GraphSpec spec;
  if (text.rfind("sp:", 0) == 0) {
    spec.source = Source::Sp;
    spec.value = text.substr(3);
  } else if (text.rfind("file:", 0) == 0) {
    spec.source = Source::File;
    spec.value = text.substr(5);
  } else if (text == "e" || text.rfind("S(", 0) == 0 || text.rfind("P(", 0) == 0) {
    spec.source = Source::Sp;
    spec.value = text;
  } else {
    spec.source = Source::Standard;
    spec.value = text;
  }
  if (spec.value.empty()) throw ConfigError("graph.spec", "empty graph specification");
  return spec;
}

std::string GraphSpec::to_string() const {
  switch (source) {
    case Source::Sp: return "sp:" + value;
    case Source::File: return "file:" + value;
    case Source::Standard: return value;
  }
  return value;
}

LoadedGraph load_graph(const GraphSpec& spec) {
  try {
    switch (spec.source) {
      case GraphSpec::Source::Sp: {
        SpExpression expr = parse_sp(spec.value);
        Graph g = sp_to_graph(expr);
        return {std::move(g), std::move(expr)};
      }
      case GraphSpec::Source::File:
        return {read_graph_file(spec.value), std::nullopt};
      case GraphSpec::Source::Standard:
        if (spec.value == "sublinear_demo")
          return {sublinear_demo(), parse_sp("P(e,S(e,e))")};
        return {standard_graph(spec.value), std::nullopt};
    }
  } catch (const Error& e) {
    throw ConfigError("graph.spec", e.what());
  }
  throw ConfigError("graph.spec", "unknown graph source");
}

namespace {

template <typename T>
T parse_number(const std::string& field, const std::string& text) {
  if constexpr (std::is_floating_point_v<T>) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(text, &used);
    } catch (const std::exception&) {
      throw ConfigError(field, "expected a number, got '" + text + "'");
    }
    if (used != text.size() || !std::isfinite(value))
      throw ConfigError(field, "expected a finite number, got '" + text + "'");
    return static_cast<T>(value);
  } else {
    T value{};
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size())
      throw ConfigError(field, "expected a non-negative integer, got '" + text + "'");
    return value;
  }
}

using Setter = void (*)(ExperimentConfig&, const std::string& field, const std::string& value);

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table{
      {"graph.spec", [](ExperimentConfig& c, const std::string&, const std::string& v) {
         c.graph = GraphSpec::parse(v);
       }},
      {"rule.variant", [](ExperimentConfig& c, const std::string& f, const std::string& v) {
         try {
           c.rule.variant = parse_rule_variant(v);
         } catch (const Error& e) {
           throw ConfigError(f, e.what());
         }
       }},
      {"rule.exponent", [](ExperimentConfig& c, const std::string& f, const std::string& v) {
         c.rule.walk_exponent = parse_number<double>(f, v);
       }},
      {"run.steps", [](ExperimentConfig& c, const std::string& f, const std::string& v) {
         c.steps = parse_number<std::uint64_t>(f, v);
       }},
      {"run.replicas", [](ExperimentConfig& c, const std::string& f, const std::string& v) {
         c.replicas = parse_number<std::uint32_t>(f, v);
       }},
      {"run.seed", [](ExperimentConfig& c, const std::string& f, const std::string& v) {
         c.seed = parse_number<std::uint64_t>(f, v);
       }},
      {"run.step_cap", [](ExperimentConfig& c, const std::string& f, const std::string& v) {
         c.step_cap = parse_number<std::uint64_t>(f, v);
       }},
      {"run.threads", [](ExperimentConfig& c, const std::string& f, const std::string& v) {
         c.threads = parse_number<unsigned>(f, v);
       }},
      {"record.schedule", [](ExperimentConfig& c, const std::string&, const std::string& v) {
         c.schedule = v;
       }},
      {"record.ratio", [](ExperimentConfig& c, const std::string& f, const std::string& v) {
         c.ratio = parse_number<double>(f, v);
       }},
      {"record.stride", [](ExperimentConfig& c, const std::string& f, const std::string& v) {
         c.stride = parse_number<std::uint64_t>(f, v);
       }},
      {"output.dir", [](ExperimentConfig& c, const std::string&, const std::string& v) {
         c.out_dir = v;
       }},
      {"counterexample.length", [](ExperimentConfig& c, const std::string& f, const std::string& v) {
         c.counterexample.length = parse_number<std::uint32_t>(f, v);
       }},
      {"counterexample.alpha", [](ExperimentConfig& c, const std::string& f, const std::string& v) {
         c.counterexample.alpha = parse_number<double>(f, v);
       }},
      {"counterexample.x_min", [](ExperimentConfig& c, const std::string& f, const std::string& v) {
         c.counterexample.x_min = parse_number<double>(f, v);
       }},
      {"counterexample.x_max", [](ExperimentConfig& c, const std::string& f, const std::string& v) {
         c.counterexample.x_max = parse_number<double>(f, v);
       }},
      {"counterexample.x_points",
       [](ExperimentConfig& c, const std::string& f, const std::string& v) {
         c.counterexample.x_points = parse_number<std::uint32_t>(f, v);
       }},
      {"counterexample.low_threshold",
       [](ExperimentConfig& c, const std::string& f, const std::string& v) {
         c.counterexample.low_threshold = parse_number<double>(f, v);
       }},
      {"sublinear.alpha", [](ExperimentConfig& c, const std::string& f, const std::string& v) {
         c.sublinear.alpha = parse_number<double>(f, v);
       }},
      {"sublinear.threshold", [](ExperimentConfig& c, const std::string& f, const std::string& v) {
         c.sublinear.threshold = parse_number<double>(f, v);
       }},
      {"urn.kind", [](ExperimentConfig& c, const std::string& f, const std::string& v) {
         try {
           c.urn.kind = parse_urn_kind(v);
         } catch (const Error& e) {
           throw ConfigError(f, e.what());
         }
       }},
      {"urn.red0", [](ExperimentConfig& c, const std::string& f, const std::string& v) {
         c.urn.red0 = parse_number<std::uint64_t>(f, v);
       }},
      {"urn.black0", [](ExperimentConfig& c, const std::string& f, const std::string& v) {
         c.urn.black0 = parse_number<std::uint64_t>(f, v);
       }},
      {"urn.n0", [](ExperimentConfig& c, const std::string& f, const std::string& v) {
         c.urn.n0 = parse_number<std::uint64_t>(f, v);
       }},
      {"urn.b", [](ExperimentConfig& c, const std::string& f, const std::string& v) {
         c.urn.generalized.b = parse_number<double>(f, v);
       }},
      {"urn.alpha", [](ExperimentConfig& c, const std::string& f, const std::string& v) {
         c.urn.generalized.alpha = parse_number<double>(f, v);
       }},
      {"urn.h", [](ExperimentConfig& c, const std::string& f, const std::string& v) {
         c.urn.generalized.h = parse_number<double>(f, v);
       }},
      {"urn.c0", [](ExperimentConfig& c, const std::string& f, const std::string& v) {
         c.urn.generalized.c0 = parse_number<double>(f, v);
       }},
      {"urn.c2", [](ExperimentConfig& c, const std::string& f, const std::string& v) {
         c.urn.generalized.c2 = parse_number<double>(f, v);
       }},
      {"urn.fit_min", [](ExperimentConfig& c, const std::string& f, const std::string& v) {
         c.urn.fit_min = parse_number<double>(f, v);
       }},
      {"urn.fit_max", [](ExperimentConfig& c, const std::string& f, const std::string& v) {
         c.urn.fit_max = parse_number<double>(f, v);
       }},
  };
  return table;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (!(rule.walk_exponent > 0.0)) throw ConfigError("rule.exponent", "must be positive");
  if (steps < 1) throw ConfigError("run.steps", "must be at least 1");
  if (replicas < 1) throw ConfigError("run.replicas", "must be at least 1");
  if (step_cap < 1) throw ConfigError("run.step_cap", "must be at least 1");
  if (schedule != "geometric" && schedule != "linear")
    throw ConfigError("record.schedule", "expected 'geometric' or 'linear'");
  if (!(ratio > 1.0)) throw ConfigError("record.ratio", "must be greater than 1");
  if (stride < 1) throw ConfigError("record.stride", "must be at least 1");
  if (counterexample.length < 1) throw ConfigError("counterexample.length", "must be at least 1");
  if (!(counterexample.alpha > 0.0)) throw ConfigError("counterexample.alpha", "must be positive");
  if (!(counterexample.x_min > 0.0) || !(counterexample.x_max < 1.0) ||
      counterexample.x_min > counterexample.x_max)
    throw ConfigError("counterexample.x_min", "need 0 < x_min <= x_max < 1");
  if (counterexample.x_points < 1) throw ConfigError("counterexample.x_points", "must be >= 1");
  if (!(sublinear.alpha > 0.0)) throw ConfigError("sublinear.alpha", "must be positive");
  if (!(sublinear.threshold > 0.0 && sublinear.threshold < 0.5))
    throw ConfigError("sublinear.threshold", "must lie in (0, 1/2)");
  if (urn.red0 + urn.black0 == 0) throw ConfigError("urn.red0", "urn needs at least one ball");
  if (!(urn.generalized.h > 0.0)) throw ConfigError("urn.h", "must be positive");
  if (!(urn.generalized.c0 > 0.0)) throw ConfigError("urn.c0", "must be positive");
  if (!(urn.generalized.c2 > 0.0)) throw ConfigError("urn.c2", "must be positive");
  if (!(urn.generalized.alpha > 0.0)) throw ConfigError("urn.alpha", "must be positive");
}

nlohmann::ordered_json ExperimentConfig::to_json() const {
  nlohmann::ordered_json j;
  j["graph"] = {{"spec", graph.to_string()}};
  j["rule"] = {{"variant", std::string(to_string(rule.variant))}, {"exponent", rule.walk_exponent}};
  j["run"] = {{"steps", steps}, {"replicas", replicas}, {"seed", seed}, {"step_cap", step_cap}};
  j["record"] = {{"schedule", schedule}, {"ratio", ratio}, {"stride", stride}};
  j["counterexample"] = {{"length", counterexample.length},
                         {"alpha", counterexample.alpha},
                         {"x_min", counterexample.x_min},
                         {"x_max", counterexample.x_max},
                         {"x_points", counterexample.x_points},
                         {"low_threshold", counterexample.low_threshold}};
  j["sublinear"] = {{"alpha", sublinear.alpha}, {"threshold", sublinear.threshold}};
  j["urn"] = {{"kind", std::string(to_string(urn.kind))},
              {"red0", urn.red0},
              {"black0", urn.black0},
              {"n0", urn.n0},
              {"b", urn.generalized.b},
              {"alpha", urn.generalized.alpha},
              {"h", urn.generalized.h},
              {"c0", urn.generalized.c0},
              {"c2", urn.generalized.c2},
              {"fit_min", urn.fit_min},
              {"fit_max", urn.fit_max}};
  return j;
}

ExperimentConfig parse_config(const std::string& text, ExperimentConfig base) {
  boost::property_tree::ptree tree;
  std::istringstream in(text);
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError("config", "line " + std::to_string(e.line()) + ": " + e.message());
  }
  const auto& table = setters();
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty())
      throw ConfigError(section, "top-level keys are not allowed; use a [section]");
    for (const auto& [key, value] : body) {
      const std::string field = section + "." + key;
      const auto it = table.find(field);
      if (it == table.end()) throw ConfigError(field, "unknown configuration key");
      it->second(base, field, value.get_value<std::string>());
    }
  }
  base.validate();
  return base;
}

ExperimentConfig load_config(const std::filesystem::path& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), std::move(base));
}

}  // namespace antwalk::experiment
