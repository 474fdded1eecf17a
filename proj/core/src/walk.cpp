#include "antwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "antwalk/errors.hpp"

namespace antwalk {

std::vector<std::uint8_t> WalkTrace::edge_set(std::size_t edge_count) const {
  std::vector<std::uint8_t> in_trace(edge_count, 0);
  for (const EdgeId e : edges) in_trace[e] = 1;
  return in_trace;
}

std::vector<std::uint32_t> WalkTrace::crossing_counts(std::size_t edge_count) const {
  std::vector<std::uint32_t> counts(edge_count, 0);
  for (const EdgeId e : edges) ++counts[e];
  return counts;
}

std::uint64_t ReinforcedPath::total_increment() const noexcept {
  if (multiplicity.empty()) return edges.size();
  std::uint64_t sum = 0;
  for (const auto k : multiplicity) sum += k;
  return sum;
}

std::string_view to_string(RuleVariant variant) noexcept {
  switch (variant) {
    case RuleVariant::LoopErased: return "loop-erased";
    case RuleVariant::UniformGeodesic: return "uniform-geodesic";
    case RuleVariant::FullTrace: return "full-trace";
    case RuleVariant::FullTraceMultiplicity: return "full-trace-multiplicity";
    case RuleVariant::EarliestGeodesic: return "earliest-geodesic";
  }
  return "?";
}

RuleVariant parse_rule_variant(std::string_view name) {
  for (auto v : {RuleVariant::LoopErased, RuleVariant::UniformGeodesic, RuleVariant::FullTrace,
                 RuleVariant::FullTraceMultiplicity, RuleVariant::EarliestGeodesic}) {
    if (to_string(v) == name) return v;
  }
  throw DomainError("unknown reinforcement rule '" + std::string(name) + "'");
}

WalkTrace sample_walk(const Graph& graph, std::span<const double> sampling_weights,
                      RandomStream& rng, std::uint64_t step_cap) {
  if (sampling_weights.size() != graph.edge_count())
    throw DomainError("sample_walk: one weight per edge required");
  WalkTrace trace;
  VertexId x = graph.nest();
  trace.vertices.push_back(x);
  while (x != graph.food()) {
    if (trace.edges.size() >= step_cap) throw CapExceeded(step_cap);
    const auto inc = graph.incident(x);
    double total = 0.0;
    for (const auto& i : inc) total += sampling_weights[i.edge];
    if (!(total > 0.0)) throw DomainError("sample_walk: vertex with no positive-weight edge");
    double u = rng.uniform() * total;
    std::size_t pick = inc.size() - 1;
    for (std::size_t k = 0; k < inc.size(); ++k) {
      u -= sampling_weights[inc[k].edge];
      if (u < 0.0) {
        pick = k;
        break;
      }
    }
    // Rounding can leave u >= 0 after the scan; fall back to the last
    // positive-weight edge.
    while (sampling_weights[inc[pick].edge] <= 0.0) --pick;
    trace.edges.push_back(inc[pick].edge);
    x = inc[pick].neighbor;
    trace.vertices.push_back(x);
  }
  return trace;
}

WalkTrace sample_walk(const Graph& graph, const WeightState& weights, double alpha,
                      RandomStream& rng, std::uint64_t step_cap) {
  if (!(alpha > 0.0)) throw DomainError("sample_walk: exponent must be positive");
  std::vector<double> w(weights.edge_count());
  for (EdgeId e = 0; e < w.size(); ++e) {
    const double we = static_cast<double>(weights[e]);
    w[e] = alpha == 1.0 ? we : std::pow(we, alpha);
  }
  return sample_walk(graph, w, rng, step_cap);
}

ReinforcedPath loop_erased_backward(const WalkTrace& trace) {
  const std::size_t k = trace.edges.size();
  // first_time[v]: first forward index of v, which is its last index in the
  // reversed trajectory.
  VertexId max_vertex = 0;
  for (const VertexId v : trace.vertices) max_vertex = std::max(max_vertex, v);
  constexpr std::size_t kNever = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> first_time(std::size_t{max_vertex} + 1, kNever);
  for (std::size_t t = 0; t <= k; ++t) {
    auto& slot = first_time[trace.vertices[t]];
    if (slot == kNever) slot = t;
  }
  ReinforcedPath path;
  std::size_t t = k;
  while (t > 0) {
    const std::size_t arrival = first_time[trace.vertices[t]];
    if (arrival == 0) break;
    path.edges.push_back(trace.edges[arrival - 1]);
    t = arrival - 1;
  }
  std::reverse(path.edges.begin(), path.edges.end());
  return path;
}

namespace {

constexpr std::int32_t kUnseen = -1;

// BFS levels from the nest inside the trace subgraph.
std::vector<std::int32_t> trace_levels(const Graph& graph, const std::vector<std::uint8_t>& in_trace,
                                       std::vector<VertexId>& order) {
  std::vector<std::int32_t> level(graph.vertex_count(), kUnseen);
  order.clear();
  order.push_back(graph.nest());
  level[graph.nest()] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const VertexId x = order[head];
    if (x == graph.food()) continue;
    for (const auto& inc : graph.incident(x)) {
      if (in_trace[inc.edge] && level[inc.neighbor] == kUnseen) {
        level[inc.neighbor] = level[x] + 1;
        order.push_back(inc.neighbor);
      }
    }
  }
  return level;
}

}  // namespace

ReinforcedPath geodesic_in_trace(const Graph& graph, const WalkTrace& trace, RandomStream& rng) {
  const auto in_trace = trace.edge_set(graph.edge_count());
  std::vector<VertexId> order;
  const auto level = trace_levels(graph, in_trace, order);
  if (level[graph.food()] == kUnseen) throw GraphError("trace does not reach the food");

  // 64-bit path counts, with an exact big-integer fallback on overflow.
  std::vector<std::uint64_t> count(graph.vertex_count(), 0);
  count[graph.nest()] = 1;
  bool overflow = false;
  for (const VertexId x : order) {
    if (x == graph.food()) continue;
    for (const auto& inc : graph.incident(x)) {
      if (in_trace[inc.edge] && level[inc.neighbor] == level[x] + 1)
        overflow |= __builtin_add_overflow(count[inc.neighbor], count[x], &count[inc.neighbor]);
    }
  }
  ReinforcedPath path;
  if (overflow) {
    const auto dag = geodesic_dag(graph, in_trace);
    path.edges = sample_geodesic(graph, *dag, rng, in_trace);
    return path;
  }
  path.edges.reserve(static_cast<std::size_t>(level[graph.food()]));
  VertexId v = graph.food();
  while (v != graph.nest()) {
    std::uint64_t r = rng.below(count[v]);
    for (const auto& inc : graph.incident(v)) {
      if (!in_trace[inc.edge] || level[inc.neighbor] + 1 != level[v]) continue;
      if (r < count[inc.neighbor]) {
        path.edges.push_back(inc.edge);
        v = inc.neighbor;
        break;
      }
      r -= count[inc.neighbor];
    }
  }
  std::reverse(path.edges.begin(), path.edges.end());
  return path;
}

ReinforcedPath earliest_geodesic_in_trace(const Graph& graph, const WalkTrace& trace) {
  const auto in_trace = trace.edge_set(graph.edge_count());
  std::vector<std::size_t> first_crossing(graph.edge_count(),
                                          std::numeric_limits<std::size_t>::max());
  for (std::size_t t = trace.edges.size(); t-- > 0;) first_crossing[trace.edges[t]] = t;
  std::vector<VertexId> order;
  const auto level = trace_levels(graph, in_trace, order);
  if (level[graph.food()] == kUnseen) throw GraphError("trace does not reach the food");

  ReinforcedPath path;
  VertexId v = graph.food();
  while (v != graph.nest()) {
    const Incidence* best = nullptr;
    for (const auto& inc : graph.incident(v)) {
      if (!in_trace[inc.edge] || level[inc.neighbor] + 1 != level[v]) continue;
      if (!best || first_crossing[inc.edge] < first_crossing[best->edge]) best = &inc;
    }
    path.edges.push_back(best->edge);
    v = best->neighbor;
  }
  std::reverse(path.edges.begin(), path.edges.end());
  return path;
}

ReinforcedPath full_trace(const WalkTrace& trace, bool with_multiplicity) {
  ReinforcedPath path;
  EdgeId max_edge = 0;
  for (const EdgeId e : trace.edges) max_edge = std::max(max_edge, e);
  std::vector<std::int64_t> slot(trace.edges.empty() ? 0 : std::size_t{max_edge} + 1, -1);
  for (const EdgeId e : trace.edges) {
    if (slot[e] < 0) {
      slot[e] = static_cast<std::int64_t>(path.edges.size());
      path.edges.push_back(e);
      if (with_multiplicity) path.multiplicity.push_back(0);
    }
    if (with_multiplicity) ++path.multiplicity[static_cast<std::size_t>(slot[e])];
  }
  return path;
}

ReinforcedPath extract_path(const Graph& graph, const WalkTrace& trace, RuleVariant variant,
                            RandomStream& rng) {
  switch (variant) {
    case RuleVariant::LoopErased: return loop_erased_backward(trace);
    case RuleVariant::UniformGeodesic: return geodesic_in_trace(graph, trace, rng);
    case RuleVariant::FullTrace: return full_trace(trace, false);
    case RuleVariant::FullTraceMultiplicity: return full_trace(trace, true);
    case RuleVariant::EarliestGeodesic: return earliest_geodesic_in_trace(graph, trace);
  }
  throw DomainError("unknown rule variant");
}

void apply_reinforcement(WeightState& weights, const ReinforcedPath& path) {
  for (std::size_t i = 0; i < path.edges.size(); ++i) weights.add(path.edges[i], path.increment(i));
  weights.advance();
}

}  // namespace antwalk
