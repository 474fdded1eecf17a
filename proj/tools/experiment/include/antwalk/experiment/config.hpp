#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "antwalk/graph.hpp"
#include "antwalk/sp_expression.hpp"
#include "antwalk/urns.hpp"
#include "antwalk/walk.hpp"

namespace antwalk::experiment {

/// Invalid configuration; the message starts with the offending field path
/// ("run.steps: ...").
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(field) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// "losange", "counterexample:5", "sp:P(e,e)" or "file:path/to/graph.txt".
/// A bare term starting with "S(", "P(" or equal to "e" is read as SP.
struct GraphSpec {
  enum class Source { Standard, Sp, File };

  Source source = Source::Standard;
  std::string value = "losange";

  static GraphSpec parse(const std::string& text);
  std::string to_string() const;
};

/// A constructed graph plus its SP term when it has one.
struct LoadedGraph {
  Graph graph;
  std::optional<SpExpression> expr;
};
LoadedGraph load_graph(const GraphSpec& spec);

struct CounterexampleOptions {
  std::uint32_t length = 100;
  double alpha = 1.0;
  double x_min = 1e-4;
  double x_max = 1e-2;
  std::uint32_t x_points = 5;  // log-spaced, endpoints included
  double low_threshold = 0.05;
};

struct SublinearOptions {
  double alpha = 1.0;
  double threshold = 0.05;
};

struct UrnOptions {
  UrnKind kind = UrnKind::Polya;
  std::uint64_t red0 = 1;
  std::uint64_t black0 = 1;
  std::uint64_t n0 = 0;
  GeneralizedUrnParams generalized{};
  double fit_min = 1e3;
  double fit_max = 1e6;
};

struct ExperimentConfig {
  GraphSpec graph{};
  ReinforcementRule rule{};
  std::uint64_t steps = 100000;
  std::uint32_t replicas = 1;
  std::uint64_t seed = 42;
  std::uint64_t step_cap = kDefaultStepCap;
  unsigned threads = 0;  // 0: hardware concurrency

  std::string schedule = "geometric";  // or "linear"
  double ratio = 1.1;
  std::uint64_t stride = 1000;

  std::filesystem::path out_dir = "out";

  CounterexampleOptions counterexample{};
  SublinearOptions sublinear{};
  UrnOptions urn{};

  void validate() const;
  nlohmann::ordered_json to_json() const;
};

/// Reads an INI file (sections graph, rule, run, record, output,
/// counterexample, sublinear, urn) on top of `base`. Unknown sections or keys
/// and unparsable values throw ConfigError.
ExperimentConfig load_config(const std::filesystem::path& path, ExperimentConfig base = {});
ExperimentConfig parse_config(const std::string& text, ExperimentConfig base = {});

}  // namespace antwalk::experiment
