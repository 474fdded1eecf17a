#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "antwalk/conductance.hpp"
#include "antwalk/graph.hpp"
#include "antwalk/rng.hpp"
#include "antwalk/walk.hpp"

namespace antwalk {

/// What a recorder sees after step n: `weights` already includes the update
/// made from `trace`/`path`.
struct StepView {
  std::uint64_t n;
  const Graph& graph;
  const WeightState& weights;
  const WalkTrace& trace;
  const ReinforcedPath& path;
};

class Recorder {
 public:
  virtual ~Recorder() = default;
  virtual void on_start(const Graph& /*graph*/, const WeightState& /*initial*/) {}
  virtual void on_step(const StepView& step) = 0;
};

/// Runs n_steps iterations of walk -> path extraction -> reinforcement on
/// `state`, notifying every recorder after each step. Propagates
/// CapExceeded; `state` then holds the weights reached so far.
void run_process(const Graph& graph, const ReinforcementRule& rule, std::uint64_t n_steps,
                 RandomStream& rng, std::span<Recorder* const> recorders, WeightState& state,
                 std::uint64_t step_cap = kDefaultStepCap);

WeightState run_process(const Graph& graph, const ReinforcementRule& rule, std::uint64_t n_steps,
                        RandomStream& rng, std::span<Recorder* const> recorders = {},
                        std::uint64_t step_cap = kDefaultStepCap);

/// True when the reinforced edge set is exactly a shortest N-F path of the
/// whole graph (every rule reinforces a superset of some N-F path).
bool is_geodesic_reinforcement(const ReinforcedPath& path, std::uint32_t h_min);

/// Sorted set of step indices at which observables are recorded. Always
/// contains 0 and n_max.
class RecordingSchedule {
 public:
  /// n = ceil(ratio^k), k = 0, 1, ...
  static RecordingSchedule geometric(double ratio, std::uint64_t n_max);
  static RecordingSchedule linear(std::uint64_t stride, std::uint64_t n_max);

  std::span<const std::uint64_t> points() const noexcept { return points_; }
  bool contains(std::uint64_t n) const;

 private:
  std::vector<std::uint64_t> points_;
};

/// One recorded row of a trajectory.
struct TrajectoryRow {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> weights;
  double conductance = 0.0;
  bool geodesic = false;       // the reinforcement at step n (false at n = 0)
  std::uint64_t geodesic_count = 0;  // geodesic reinforcements in steps 1..n
};

/// Records weights, effective conductance and the geodesic indicator at the
/// schedule points.
class TrajectoryRecorder : public Recorder {
 public:
  TrajectoryRecorder(RecordingSchedule schedule, ConductanceEvaluator conductance,
                     std::uint32_t h_min)
      : schedule_(std::move(schedule)), conductance_(std::move(conductance)), h_min_(h_min) {}

  void on_start(const Graph& graph, const WeightState& initial) override;
  void on_step(const StepView& step) override;

  const std::vector<TrajectoryRow>& rows() const noexcept { return rows_; }

 private:
  void record(std::uint64_t n, const WeightState& weights, bool geodesic);

  RecordingSchedule schedule_;
  ConductanceEvaluator conductance_;
  std::uint32_t h_min_;
  std::uint64_t geodesic_count_ = 0;
  std::vector<TrajectoryRow> rows_;
};

/// Counts geodesic reinforcements among steps in [first, last].
class GeodesicWindowRecorder : public Recorder {
 public:
  GeodesicWindowRecorder(std::uint32_t h_min, std::uint64_t first, std::uint64_t last)
      : h_min_(h_min), first_(first), last_(last) {}

  void on_step(const StepView& step) override;

  std::uint64_t steps() const noexcept { return steps_; }
  std::uint64_t geodesic() const noexcept { return geodesic_; }
  double fraction() const noexcept {
    return steps_ == 0 ? 0.0 : static_cast<double>(geodesic_) / static_cast<double>(steps_);
  }

 private:
  std::uint32_t h_min_;
  std::uint64_t first_, last_;
  std::uint64_t steps_ = 0, geodesic_ = 0;
};

/// Checks, after every step, C(n) - C(0) >= n / h_max and, when
/// `check_increments` is set (path rules only), that the conductance increment
/// lies in [1/L, 1]. Tracks the smallest slack of each bound (negative means
/// violated).
class ConductanceBoundsRecorder : public Recorder {
 public:
  ConductanceBoundsRecorder(ConductanceEvaluator conductance, std::uint32_t h_max,
                            bool check_increments = true)
      : conductance_(std::move(conductance)), h_max_(h_max), check_increments_(check_increments) {}

  void on_start(const Graph& graph, const WeightState& initial) override;
  void on_step(const StepView& step) override;

  double min_growth_slack() const noexcept { return min_growth_slack_; }
  double min_increment_lower_slack() const noexcept { return min_lower_slack_; }
  double min_increment_upper_slack() const noexcept { return min_upper_slack_; }
  std::uint64_t steps_checked() const noexcept { return steps_; }
  double last_conductance() const noexcept { return previous_; }

 private:
  ConductanceEvaluator conductance_;
  std::uint32_t h_max_;
  bool check_increments_;
  double initial_ = 0.0;
  double previous_ = 0.0;
  double min_growth_slack_ = 1e300;
  double min_lower_slack_ = 1e300;
  double min_upper_slack_ = 1e300;
  std::uint64_t steps_ = 0;
};

}  // namespace antwalk
