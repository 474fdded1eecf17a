#include "antwalk/standard_graphs.hpp"

#include <charconv>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "antwalk/errors.hpp"
#include "antwalk/sp_expression.hpp"

namespace antwalk {

Graph losange() {
  using namespace losange_vertex;
  std::vector<Endpoints> edges{
      {kNest, kLeft}, {kLeft, kFood}, {kLeft, kRight}, {kNest, kRight}, {kRight, kFood}};
  return Graph(4, std::move(edges), kNest, kFood, {"N", "left", "right", "F"});
}

Graph counterexample(std::uint32_t length) {
  if (length < 1) throw GraphError("counterexample: L must be at least 1");
  const CounterexampleLayout layout{length};
  std::vector<std::string> names{"N", "F", "P"};
  std::vector<Endpoints> edges;
  edges.reserve(layout.edge_count());

  // Interior vertices of the left path get ids 3..L+1, right path L+2..2L.
  auto add_path = [&](char side) {
    VertexId prev = CounterexampleLayout::kNest;
    for (std::uint32_t i = 0; i < length; ++i) {
      VertexId next = CounterexampleLayout::kJunction;
      if (i + 1 < length) {
        next = static_cast<VertexId>(names.size());
        names.push_back(std::string(1, side) + std::to_string(i + 1));
      }
      edges.push_back({prev, next});
      prev = next;
    }
  };
  add_path('a');
  add_path('b');
  edges.push_back({CounterexampleLayout::kJunction, CounterexampleLayout::kFood});
  const std::size_t n = names.size();
  return Graph(n, std::move(edges), CounterexampleLayout::kNest, CounterexampleLayout::kFood,
               std::move(names));
}

Graph sublinear_demo() { return sp_to_graph(parse_sp("P(e,S(e,e))")); }

namespace {

using Point = std::pair<std::int64_t, std::int64_t>;

// Upward elementary triangles of a gasket with lower-left corner (x, y) and
// side `side` on the triangular lattice; the base runs along y = const.
void gasket_edges(std::int64_t x, std::int64_t y, std::int64_t side, std::int64_t sign,
                  std::set<std::pair<Point, Point>>& out) {
  if (side == 1) {
    const Point a{x, y}, b{x + 1, y}, c{x, y + sign};
    auto add = [&out](Point p, Point q) { out.insert(p < q ? std::pair{p, q} : std::pair{q, p}); };
    add(a, b);
    add(a, c);
    add(b, c);
    return;
  }
  const std::int64_t half = side / 2;
  gasket_edges(x, y, half, sign, out);
  gasket_edges(x + half, y, half, sign, out);
  gasket_edges(x, y + sign * half, half, sign, out);
}

}  // namespace

Graph double_sierpinski(std::uint32_t depth) {
  if (depth < 1 || depth > 12) throw GraphError("double_sierpinski: depth must be in [1, 12]");
  const std::int64_t side = std::int64_t{1} << (depth - 1);
  std::set<std::pair<Point, Point>> segments;
  gasket_edges(0, 0, side, +1, segments);
  gasket_edges(0, 0, side, -1, segments);

  const Point nest{0, side};
  const Point food{0, -side};
  std::map<Point, VertexId> ids{{nest, 0}, {food, 1}};
  std::set<Point> points;
  for (const auto& [p, q] : segments) {
    points.insert(p);
    points.insert(q);
  }
  std::vector<std::string> names{"N", "F"};
  for (const Point& p : points) {
    if (ids.count(p)) continue;
    ids.emplace(p, static_cast<VertexId>(names.size()));
    names.push_back("(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")");
  }
  std::vector<Endpoints> edges;
  edges.reserve(segments.size());
  for (const auto& [p, q] : segments) edges.push_back({ids.at(p), ids.at(q)});
  const std::size_t n = names.size();
  return Graph(n, std::move(edges), 0, 1, std::move(names));
}

Graph standard_graph(std::string_view name) {
  const auto colon = name.find(':');
  const std::string_view base = name.substr(0, colon);
  std::uint32_t param = 0;
  const bool has_param = colon != std::string_view::npos;
  if (has_param) {
    const std::string_view digits = name.substr(colon + 1);
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), param);
    if (ec != std::errc{} || end != digits.data() + digits.size())
      throw GraphError("bad parameter in graph name '" + std::string(name) + "'");
  }
  if (base == "losange" && !has_param) return losange();
  if (base == "sublinear_demo" && !has_param) return sublinear_demo();
  if (base == "counterexample" && has_param) return counterexample(param);
  if (base == "double_sierpinski" && has_param) return double_sierpinski(param);
  throw GraphError("unknown standard graph '" + std::string(name) + "'");
}

}  // namespace antwalk
