#include "antwalk/geodesic.hpp"

#include <algorithm>

#include "antwalk/errors.hpp"

namespace antwalk {
namespace {

bool allowed(EdgeFilter filter, EdgeId e) { return filter.empty() || filter[e] != 0; }

// BFS levels from `source`; also returns vertices in visiting order.
std::vector<std::int32_t> bfs_levels(const Graph& graph, VertexId source, EdgeFilter filter,
                                     std::vector<VertexId>& order) {
  std::vector<std::int32_t> level(graph.vertex_count(), GeodesicDag::kUnreached);
  order.clear();
  order.push_back(source);
  level[source] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const VertexId x = order[head];
    for (const auto& inc : graph.incident(x)) {
      if (!allowed(filter, inc.edge) || level[inc.neighbor] != GeodesicDag::kUnreached)
        continue;
      level[inc.neighbor] = level[x] + 1;
      order.push_back(inc.neighbor);
    }
  }
  return level;
}

std::vector<PathCount> count_paths(const Graph& graph, const std::vector<std::int32_t>& level,
                                   const std::vector<VertexId>& order, EdgeFilter filter) {
  std::vector<PathCount> count(graph.vertex_count(), 0);
  count[order.front()] = 1;
  for (const VertexId x : order) {
    for (const auto& inc : graph.incident(x)) {
      if (allowed(filter, inc.edge) && level[inc.neighbor] == level[x] + 1)
        count[inc.neighbor] += count[x];
    }
  }
  return count;
}

void longest_from(const Graph& graph, VertexId x, std::uint32_t depth,
                  std::vector<char>& on_path, std::uint32_t& best) {
  if (x == graph.food()) {
    best = std::max(best, depth);
    return;
  }
  on_path[x] = 1;
  for (const auto& inc : graph.incident(x)) {
    if (!on_path[inc.neighbor]) longest_from(graph, inc.neighbor, depth + 1, on_path, best);
  }
  on_path[x] = 0;
}

}  // namespace

std::uint32_t h_min(const Graph& graph) {
  std::vector<VertexId> order;
  const auto level = bfs_levels(graph, graph.nest(), {}, order);
  return static_cast<std::uint32_t>(level[graph.food()]);
}

std::uint32_t h_max(const Graph& graph) {
  std::vector<char> on_path(graph.vertex_count(), 0);
  std::uint32_t best = 0;
  longest_from(graph, graph.nest(), 0, on_path, best);
  return best;
}

std::optional<GeodesicDag> geodesic_dag(const Graph& graph, EdgeFilter restrict_to) {
  if (!restrict_to.empty() && restrict_to.size() != graph.edge_count())
    throw GraphError("edge filter size does not match edge count");
  GeodesicDag dag;
  std::vector<VertexId> order_from_nest;
  std::vector<VertexId> order_from_food;
  dag.level = bfs_levels(graph, graph.nest(), restrict_to, order_from_nest);
  if (dag.level[graph.food()] == GeodesicDag::kUnreached) return std::nullopt;
  dag.level_to_food = bfs_levels(graph, graph.food(), restrict_to, order_from_food);
  dag.length = static_cast<std::uint32_t>(dag.level[graph.food()]);
  dag.paths_from_nest = count_paths(graph, dag.level, order_from_nest, restrict_to);
  dag.paths_to_food = count_paths(graph, dag.level_to_food, order_from_food, restrict_to);
  dag.total = dag.paths_from_nest[graph.food()];
  return dag;
}

PathCount uniform_below(const PathCount& bound, RandomStream& rng) {
  if (bound <= 0) throw DomainError("uniform_below: bound must be positive");
  if (bound <= std::numeric_limits<std::uint64_t>::max())
    return PathCount(rng.below(bound.convert_to<std::uint64_t>()));
  const std::size_t bits = boost::multiprecision::msb(bound) + 1;
  for (;;) {
    PathCount candidate = 0;
    std::size_t produced = 0;
    while (produced < bits) {
      candidate <<= 32;
      candidate |= rng();
      produced += 32;
    }
    candidate >>= (produced - bits);
    if (candidate < bound) return candidate;
  }
}

std::vector<EdgeId> sample_geodesic(const Graph& graph, const GeodesicDag& dag,
                                    RandomStream& rng, EdgeFilter restrict_to) {
  std::vector<EdgeId> path;
  path.reserve(dag.length);
  VertexId v = graph.food();
  while (v != graph.nest()) {
    PathCount r = uniform_below(dag.paths_from_nest[v], rng);
    bool moved = false;
    for (const auto& inc : graph.incident(v)) {
      if (!allowed(restrict_to, inc.edge) || dag.level[inc.neighbor] + 1 != dag.level[v])
        continue;
      const PathCount& c = dag.paths_from_nest[inc.neighbor];
      if (r < c) {
        path.push_back(inc.edge);
        v = inc.neighbor;
        moved = true;
        break;
      }
      r -= c;
    }
    if (!moved) throw Error("sample_geodesic: inconsistent geodesic DAG");
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace antwalk
