#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "antwalk/experiment/config.hpp"
#include "antwalk/process.hpp"

namespace antwalk::experiment {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitConfig = 2,
  kExitAllReplicasFailed = 3,
  kExitCheckFailed = 4,
};

/// Named pass/fail records collected in --check mode.
class CheckList {
 public:
  void add(std::string name, bool passed, nlohmann::ordered_json detail = nullptr);
  bool passed() const noexcept { return passed_; }
  bool empty() const noexcept { return items_.empty(); }
  const nlohmann::ordered_json& items() const noexcept { return items_; }

 private:
  nlohmann::ordered_json items_ = nlohmann::ordered_json::array();
  bool passed_ = true;
};

/// What a subcommand wrote: the summary document (also saved as
/// out_dir/summary.json), the files produced and the exit code.
struct CommandResult {
  int exit_code = kExitOk;
  nlohmann::ordered_json summary;
  std::vector<std::string> files;
};

RecordingSchedule make_schedule(const ExperimentConfig& config);

/// Ant process on config.graph: out_dir/trajectory.csv with columns
/// replica, n, W_0 .. W_{E-1}, C_G, geodesic, geodesic_count.
CommandResult run_simulate(const ExperimentConfig& config, bool check);

/// counterexample(L): out_dir/counterexample.csv (replica, n, N1, N1_over_n)
/// and out_dir/exact_F.csv (x, p, F, symmetry_residual, asymptotic).
CommandResult run_counterexample(const ExperimentConfig& config, bool check);

/// Walks with weights W^alpha on P(e,S(e,e)): out_dir/sublinear.csv with the
/// terminal weights and the class of each replica.
CommandResult run_sublinear(const ExperimentConfig& config, bool check);

/// Effective conductance of config.graph at `weights` (all ones if empty).
CommandResult run_conductance(const ExperimentConfig& config, const std::vector<double>& weights,
                              bool check);

struct LosangeRequest {
  std::optional<std::array<double, 5>> point;
  std::uint32_t sweep = 0;  // number of sampled points of the invariant set
  double w3_max = 1.0;
  double rho = 0.125;
  double epsilon = 0.0;
};

/// Point mode: p-vector, closed forms, drift and inequality slacks at one w.
/// Sweep mode: out_dir/losange_sweep.csv over sampled points.
CommandResult run_losange_analytics(const ExperimentConfig& config, const LosangeRequest& request,
                                    bool check);

/// Urn replicas: out_dir/urn.csv with columns replica, n, R.
CommandResult run_urn(const ExperimentConfig& config, bool check);

}  // namespace antwalk::experiment
