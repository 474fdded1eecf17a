#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "antwalk/geodesic.hpp"
#include "antwalk/graph.hpp"
#include "antwalk/rng.hpp"

namespace antwalk {

inline constexpr std::uint64_t kDefaultStepCap = 10'000'000;

/// Exact integer edge weights after n reinforcements. Starts at all ones.
class WeightState {
 public:
  explicit WeightState(std::size_t edge_count) : weights_(edge_count, 1) {}

  std::uint64_t operator[](EdgeId e) const { return weights_[e]; }
  std::span<const std::uint64_t> weights() const noexcept { return weights_; }
  std::size_t edge_count() const noexcept { return weights_.size(); }
  std::uint64_t n() const noexcept { return n_; }
  /// Sum of all weights: edge_count + total increments so far.
  std::uint64_t total() const noexcept { return total_; }

  void add(EdgeId e, std::uint64_t amount) {
    weights_.at(e) += amount;
    total_ += amount;
  }
  void advance() noexcept { ++n_; }

  std::vector<double> as_doubles() const { return {weights_.begin(), weights_.end()}; }

 private:
  std::vector<std::uint64_t> weights_;
  std::uint64_t n_ = 0;
  std::uint64_t total_ = weights_.size();
};

/// One killed walk: vertices X_0 = N, ..., X_K = F and the K crossed edges
/// (edges[t] joins vertices[t] and vertices[t+1]).
struct WalkTrace {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const noexcept { return edges.size(); }
  /// Indicator of the trace edge set, indexed by edge id.
  std::vector<std::uint8_t> edge_set(std::size_t edge_count) const;
  std::vector<std::uint32_t> crossing_counts(std::size_t edge_count) const;
};

enum class RuleVariant : std::uint8_t {
  LoopErased,
  UniformGeodesic,
  FullTrace,
  FullTraceMultiplicity,
  // Backward walk from F inside the geodesic DAG of the trace, taking at each
  // vertex the predecessor edge that was crossed first.
  EarliestGeodesic,
};

std::string_view to_string(RuleVariant variant) noexcept;
/// Accepts the names produced by to_string(); throws DomainError otherwise.
RuleVariant parse_rule_variant(std::string_view name);

struct ReinforcementRule {
  RuleVariant variant = RuleVariant::LoopErased;
  double walk_exponent = 1.0;  // alpha: walks sample edges with weight W_e^alpha
};

/// Edges to reinforce. For path rules the edges form a self-avoiding N->F
/// path listed from N to F; for the full-trace rules they are the distinct
/// trace edges in order of first crossing. `multiplicity` is empty (all ones)
/// except for FullTraceMultiplicity.
struct ReinforcedPath {
  std::vector<EdgeId> edges;
  std::vector<std::uint32_t> multiplicity;

  std::uint64_t increment(std::size_t i) const noexcept {
    return multiplicity.empty() ? 1 : multiplicity[i];
  }
  std::uint64_t total_increment() const noexcept;
};

/// Walk from the nest, each step choosing an incident edge with probability
/// proportional to sampling_weights[e]; stops on the first visit to the food.
/// Throws CapExceeded after step_cap steps.
WalkTrace sample_walk(const Graph& graph, std::span<const double> sampling_weights,
                      RandomStream& rng, std::uint64_t step_cap = kDefaultStepCap);

/// Same with sampling weights W_e^alpha.
WalkTrace sample_walk(const Graph& graph, const WeightState& weights, double alpha,
                      RandomStream& rng, std::uint64_t step_cap = kDefaultStepCap);

/// Loop erasure of the time-reversed trajectory: starting from F, repeatedly
/// jump to the last index (in reversed time) of the current vertex and take
/// the next step. Equivalently each vertex is left through the edge by which
/// it was first entered.
ReinforcedPath loop_erased_backward(const WalkTrace& trace);

/// A uniformly random shortest N->F path of the trace subgraph.
ReinforcedPath geodesic_in_trace(const Graph& graph, const WalkTrace& trace, RandomStream& rng);

ReinforcedPath earliest_geodesic_in_trace(const Graph& graph, const WalkTrace& trace);

ReinforcedPath full_trace(const WalkTrace& trace, bool with_multiplicity);

/// Applies `variant` to a trace.
ReinforcedPath extract_path(const Graph& graph, const WalkTrace& trace, RuleVariant variant,
                            RandomStream& rng);

/// W_e += increment for every listed edge, then n += 1.
void apply_reinforcement(WeightState& weights, const ReinforcedPath& path);

}  // namespace antwalk
