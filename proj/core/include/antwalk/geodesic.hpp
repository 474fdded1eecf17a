#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "antwalk/graph.hpp"
#include "antwalk/rng.hpp"

namespace antwalk {

/// Exact path counts; geodesic counts grow exponentially with graph size.
using PathCount = boost::multiprecision::cpp_int;

/// Edge filter: empty span means "all edges", otherwise allowed[e] != 0.
using EdgeFilter = std::span<const std::uint8_t>;

/// BFS distance from the nest to the food.
std::uint32_t h_min(const Graph& graph);

/// Length of the longest self-avoiding nest-to-food path. Exhaustive DFS:
/// exponential in the worst case, intended for desk-scale graphs only.
std::uint32_t h_max(const Graph& graph);

/// Shortest nest-to-food paths, as a layered DAG with exact counts.
struct GeodesicDag {
  static constexpr std::int32_t kUnreached = -1;

  std::uint32_t length = 0;                  // geodesic length
  std::vector<std::int32_t> level;           // BFS level from N, kUnreached if none
  std::vector<std::int32_t> level_to_food;   // BFS level from F
  std::vector<PathCount> paths_from_nest;    // shortest N->v paths
  std::vector<PathCount> paths_to_food;      // shortest v->F paths
  PathCount total;                           // number of N->F geodesics

  bool on_geodesic(VertexId v) const {
    return level[v] != kUnreached && level_to_food[v] != kUnreached &&
           static_cast<std::uint32_t>(level[v] + level_to_food[v]) == length;
  }
  /// Number of distinct geodesics through v (0 if v is on none).
  PathCount paths_through(VertexId v) const {
    return on_geodesic(v) ? PathCount(paths_from_nest[v] * paths_to_food[v]) : PathCount(0);
  }
};

/// Returns std::nullopt when F is unreachable from N within the filter.
std::optional<GeodesicDag> geodesic_dag(const Graph& graph, EdgeFilter restrict_to = {});

/// Uniform integer in [0, bound); bound must be positive.
PathCount uniform_below(const PathCount& bound, RandomStream& rng);

/// Exactly uniform sample among all geodesics of the DAG: backward from F,
/// each predecessor edge is chosen with probability proportional to the
/// number of shortest paths reaching its tail. Edges returned in N->F order.
/// `restrict_to` must be the filter the DAG was built with.
std::vector<EdgeId> sample_geodesic(const Graph& graph, const GeodesicDag& dag,
                                    RandomStream& rng, EdgeFilter restrict_to = {});

}  // namespace antwalk
