#include "common.hpp"

#include <cmath>

namespace antwalk::experiment {

void CheckList::add(std::string name, bool passed, nlohmann::ordered_json detail) {
  nlohmann::ordered_json item;
  item["name"] = std::move(name);
  item["passed"] = passed;
  if (!detail.is_null()) item["detail"] = std::move(detail);
  items_.push_back(std::move(item));
  passed_ = passed_ && passed;
}

RecordingSchedule make_schedule(const ExperimentConfig& config) {
  if (config.schedule == "linear") return RecordingSchedule::linear(config.stride, config.steps);
  return RecordingSchedule::geometric(config.ratio, config.steps);
}

namespace detail {

std::filesystem::path prepare_out_dir(const ExperimentConfig& config) {
  std::error_code ec;
  std::filesystem::create_directories(config.out_dir, ec);
  if (ec) throw ConfigError("output.dir", "cannot create " + config.out_dir.string() + ": " + ec.message());
  return config.out_dir;
}

CommandResult finish(const std::filesystem::path& dir, nlohmann::ordered_json summary,
                     std::vector<std::string> files, const CheckList* checks,
                     std::size_t completed, std::size_t requested) {
  CommandResult result;
  if (checks != nullptr) {
    summary["checks"] = checks->items();
    summary["checks_passed"] = checks->passed();
  }
  files.push_back((dir / "summary.json").string());
  summary["files"] = nlohmann::ordered_json::array();
  for (const auto& f : files) summary["files"].push_back(std::filesystem::path(f).filename().string());
  write_json(dir / "summary.json", summary);
  if (requested > 0 && completed == 0) {
    result.exit_code = kExitAllReplicasFailed;
  } else if (checks != nullptr && !checks->passed()) {
    result.exit_code = kExitCheckFailed;
  }
  result.summary = std::move(summary);
  result.files = std::move(files);
  return result;
}

std::vector<double> log_grid(double lo, double hi, std::uint32_t points) {
  std::vector<double> xs;
  if (points == 1) return {lo};
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (std::uint32_t k = 0; k < points; ++k) {
    xs.push_back(k + 1 == points ? hi : std::pow(10.0, a + (b - a) * k / (points - 1)));
  }
  xs.front() = lo;
  return xs;
}

}  // namespace detail
}  // namespace antwalk::experiment
