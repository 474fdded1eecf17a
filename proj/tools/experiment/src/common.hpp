#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "antwalk/experiment/commands.hpp"
#include "antwalk/experiment/output.hpp"
#include "antwalk/experiment/replicas.hpp"

namespace antwalk::experiment::detail {

std::filesystem::path prepare_out_dir(const ExperimentConfig& config);

/// Appends failure records and the censoring note; returns the number of
/// completed replicas.
template <typename T>
std::size_t record_failures(nlohmann::ordered_json& summary,
                            const std::vector<ReplicaOutcome<T>>& outcomes) {
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  std::size_t completed = 0;
  for (const auto& o : outcomes) {
    if (o.value) {
      ++completed;
    } else {
      failures.push_back({{"replica", o.replica}, {"error", o.error}});
    }
  }
  summary["replicas_requested"] = outcomes.size();
  summary["replicas_completed"] = completed;
  summary["failures"] = failures;
  if (!failures.empty()) {
    summary["censoring_note"] =
        "failed replicas (step cap reached) are excluded from every aggregate; the aggregates "
        "are conditional on completion and would shift toward slow-hitting trajectories if "
        "the censored replicas were included";
  }
  return completed;
}

/// Writes summary.json with the check list and picks the exit code.
CommandResult finish(const std::filesystem::path& dir, nlohmann::ordered_json summary,
                     std::vector<std::string> files, const CheckList* checks,
                     std::size_t completed, std::size_t requested);

std::vector<double> log_grid(double lo, double hi, std::uint32_t points);

}  // namespace antwalk::experiment::detail
