#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace antwalk {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Endpoints {
  VertexId u;
  VertexId v;

  VertexId other(VertexId x) const noexcept { return x == u ? v : u; }
  bool touches(VertexId x) const noexcept { return x == u || x == v; }
};

struct Incidence {
  EdgeId edge;
  VertexId neighbor;
};

/// Finite undirected multigraph with a distinguished nest (N) and food (F).
///
/// Edge ids are dense (0..edge_count()-1) and are the identity of a weight:
/// parallel edges between the same endpoints are distinct edges. The
/// constructor rejects self-loops, N == F and disconnected graphs. Immutable
/// after construction.
class Graph {
 public:
  Graph(std::size_t vertex_count, std::vector<Endpoints> edges, VertexId nest,
        VertexId food, std::vector<std::string> vertex_names = {});

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  VertexId nest() const noexcept { return nest_; }
  VertexId food() const noexcept { return food_; }

  const Endpoints& endpoints(EdgeId e) const { return edges_.at(e); }
  std::span<const Endpoints> edges() const noexcept { return edges_; }

  /// Edges incident to v, in increasing edge-id order.
  std::span<const Incidence> incident(VertexId v) const noexcept {
    return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  /// Vertex label; defaults to the decimal id when no names were supplied.
  const std::string& vertex_name(VertexId v) const { return names_.at(v); }
  std::optional<VertexId> find_vertex(std::string_view name) const;

 private:
  std::size_t vertex_count_;
  std::vector<Endpoints> edges_;
  VertexId nest_;
  VertexId food_;
  std::vector<std::string> names_;
  std::vector<std::size_t> offsets_;
  std::vector<Incidence> incidence_;
};

}  // namespace antwalk
