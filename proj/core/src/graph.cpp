#include "antwalk/graph.hpp"

#include <algorithm>
#include <numeric>

#include "antwalk/errors.hpp"

namespace antwalk {

Graph::Graph(std::size_t vertex_count, std::vector<Endpoints> edges, VertexId nest,
             VertexId food, std::vector<std::string> vertex_names)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      nest_(nest),
      food_(food),
      names_(std::move(vertex_names)) {
  if (vertex_count_ < 2) throw GraphError("graph needs at least two vertices");
  if (nest_ >= vertex_count_ || food_ >= vertex_count_)
    throw GraphError("nest or food vertex out of range");
  if (nest_ == food_) throw GraphError("nest and food must be distinct vertices");
  if (names_.empty()) {
    names_.reserve(vertex_count_);
    for (std::size_t v = 0; v < vertex_count_; ++v) names_.push_back(std::to_string(v));
  } else if (names_.size() != vertex_count_) {
    throw GraphError("vertex name count does not match vertex count");
  }

  std::vector<std::size_t> degree(vertex_count_, 0);
  for (const auto& [u, v] : edges_) {
    if (u >= vertex_count_ || v >= vertex_count_)
      throw GraphError("edge endpoint out of range");
    if (u == v) throw GraphError("self-loops are not supported");
    ++degree[u];
    ++degree[v];
  }
  offsets_.assign(vertex_count_ + 1, 0);
  std::partial_sum(degree.begin(), degree.end(), offsets_.begin() + 1);
  incidence_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    incidence_[cursor[u]++] = {e, v};
    incidence_[cursor[v]++] = {e, u};
  }

  // Connectivity from the nest.
  std::vector<char> seen(vertex_count_, 0);
  std::vector<VertexId> stack{nest_};
  seen[nest_] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (const auto& inc : incident(x)) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
  }
  if (reached != vertex_count_) throw GraphError("graph is not connected");
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

}  // namespace antwalk
