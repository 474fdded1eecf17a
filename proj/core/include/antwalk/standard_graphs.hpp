#pragma once

#include <cstdint>
#include <string_view>

#include "antwalk/graph.hpp"

namespace antwalk {

/// Edge ids of the losange (0-based; edge k is drawn as edge k+1 in the usual
/// picture). The left vertex touches edges 1, 2 and 3, the right vertex edges
/// 3, 4 and 5.
namespace losange_edge {
inline constexpr EdgeId kNestLeft = 0;   // edge 1
inline constexpr EdgeId kLeftFood = 1;   // edge 2
inline constexpr EdgeId kMiddle = 2;     // edge 3
inline constexpr EdgeId kNestRight = 3;  // edge 4
inline constexpr EdgeId kRightFood = 4;  // edge 5
}  // namespace losange_edge

namespace losange_vertex {
inline constexpr VertexId kNest = 0;
inline constexpr VertexId kLeft = 1;
inline constexpr VertexId kRight = 2;
inline constexpr VertexId kFood = 3;
}  // namespace losange_vertex

/// Diamond N-left-F / N-right-F with a middle edge left-right.
Graph losange();

/// Id layout of counterexample(L): two disjoint length-L paths from N to P
/// plus the edge P-F. Left path edges are 0..L-1 (from N towards P), right
/// path edges L..2L-1, and the P-F edge is 2L.
struct CounterexampleLayout {
  std::uint32_t length;

  static constexpr VertexId kNest = 0;
  static constexpr VertexId kFood = 1;
  static constexpr VertexId kJunction = 2;  // P

  EdgeId left_edge(std::uint32_t i) const noexcept { return i; }
  EdgeId right_edge(std::uint32_t i) const noexcept { return length + i; }
  EdgeId junction_food_edge() const noexcept { return 2 * length; }
  std::size_t vertex_count() const noexcept { return 2 * std::size_t{length} + 1; }
  std::size_t edge_count() const noexcept { return 2 * std::size_t{length} + 1; }
};

Graph counterexample(std::uint32_t length);

/// Triangle N-m-F plus the direct edge N-F, i.e. P(e,S(e,e)): edge 0 is the
/// direct N-F edge, edges 1 and 2 the two-step path.
Graph sublinear_demo();

/// Two Sierpinski gaskets of the given depth glued along their bases (the
/// base side, with its subdivision vertices and edges, is shared). N and F
/// are the two apexes opposite the base. Depth 1 is the losange.
Graph double_sierpinski(std::uint32_t depth);

/// Looks up "losange", "sublinear_demo", "counterexample:<L>" or
/// "double_sierpinski:<depth>". Throws GraphError on unknown names.
Graph standard_graph(std::string_view name);

}  // namespace antwalk
