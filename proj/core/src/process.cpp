#include "antwalk/process.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "antwalk/errors.hpp"

namespace antwalk {

void run_process(const Graph& graph, const ReinforcementRule& rule, std::uint64_t n_steps,
                 RandomStream& rng, std::span<Recorder* const> recorders, WeightState& state,
                 std::uint64_t step_cap) {
  if (state.edge_count() != graph.edge_count())
    throw DomainError("run_process: weight state does not match graph");
  for (Recorder* r : recorders) r->on_start(graph, state);
  std::vector<double> sampling(graph.edge_count());
  for (std::uint64_t i = 0; i < n_steps; ++i) {
    for (EdgeId e = 0; e < sampling.size(); ++e) {
      const double w = static_cast<double>(state[e]);
      sampling[e] = rule.walk_exponent == 1.0 ? w : std::pow(w, rule.walk_exponent);
    }
    const WalkTrace trace = sample_walk(graph, sampling, rng, step_cap);
    const ReinforcedPath path = extract_path(graph, trace, rule.variant, rng);
    apply_reinforcement(state, path);
    const StepView view{state.n(), graph, state, trace, path};
    for (Recorder* r : recorders) r->on_step(view);
  }
}

WeightState run_process(const Graph& graph, const ReinforcementRule& rule, std::uint64_t n_steps,
                        RandomStream& rng, std::span<Recorder* const> recorders,
                        std::uint64_t step_cap) {
  WeightState state(graph.edge_count());
  run_process(graph, rule, n_steps, rng, recorders, state, step_cap);
  return state;
}

bool is_geodesic_reinforcement(const ReinforcedPath& path, std::uint32_t h_min) {
  if (path.edges.size() != h_min) return false;
  std::unordered_set<EdgeId> distinct(path.edges.begin(), path.edges.end());
  return distinct.size() == h_min;
}

RecordingSchedule RecordingSchedule::geometric(double ratio, std::uint64_t n_max) {
  if (!(ratio > 1.0)) throw DomainError("geometric schedule needs ratio > 1");
  RecordingSchedule s;
  s.points_.push_back(0);
  for (double x = 1.0; x <= static_cast<double>(n_max); x *= ratio) {
    const auto n = static_cast<std::uint64_t>(std::ceil(x - 1e-9));
    if (n > s.points_.back() && n <= n_max) s.points_.push_back(n);
  }
  if (s.points_.back() != n_max) s.points_.push_back(n_max);
  return s;
}

RecordingSchedule RecordingSchedule::linear(std::uint64_t stride, std::uint64_t n_max) {
  if (stride == 0) throw DomainError("linear schedule needs a positive stride");
  RecordingSchedule s;
  for (std::uint64_t n = 0; n <= n_max; n += stride) s.points_.push_back(n);
  if (s.points_.back() != n_max) s.points_.push_back(n_max);
  return s;
}

bool RecordingSchedule::contains(std::uint64_t n) const {
  return std::binary_search(points_.begin(), points_.end(), n);
}

void TrajectoryRecorder::on_start(const Graph&, const WeightState& initial) {
  rows_.clear();
  geodesic_count_ = 0;
  if (schedule_.contains(initial.n())) record(initial.n(), initial, false);
}

void TrajectoryRecorder::on_step(const StepView& step) {
  const bool geodesic = is_geodesic_reinforcement(step.path, h_min_);
  if (geodesic) ++geodesic_count_;
  if (schedule_.contains(step.n)) record(step.n, step.weights, geodesic);
}

void TrajectoryRecorder::record(std::uint64_t n, const WeightState& weights, bool geodesic) {
  TrajectoryRow row;
  row.n = n;
  row.weights.assign(weights.weights().begin(), weights.weights().end());
  row.conductance = conductance_(weights).value;
  row.geodesic = geodesic;
  row.geodesic_count = geodesic_count_;
  rows_.push_back(std::move(row));
}

void GeodesicWindowRecorder::on_step(const StepView& step) {
  if (step.n < first_ || step.n > last_) return;
  ++steps_;
  if (is_geodesic_reinforcement(step.path, h_min_)) ++geodesic_;
}

void ConductanceBoundsRecorder::on_start(const Graph&, const WeightState& initial) {
  initial_ = previous_ = conductance_(initial).value;
}

void ConductanceBoundsRecorder::on_step(const StepView& step) {
  const double current = conductance_(step.weights).value;
  ++steps_;
  const double growth = current - initial_;
  min_growth_slack_ =
      std::min(min_growth_slack_, growth - static_cast<double>(step.n) / h_max_);
  if (check_increments_) {
    const double delta = current - previous_;
    const double lower = 1.0 / static_cast<double>(step.path.edges.size());
    min_lower_slack_ = std::min(min_lower_slack_, delta - lower);
    min_upper_slack_ = std::min(min_upper_slack_, 1.0 - delta);
  }
  previous_ = current;
}

}  // namespace antwalk
