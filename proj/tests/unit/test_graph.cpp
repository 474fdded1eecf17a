#include <gtest/gtest.h>

#include "antwalk/errors.hpp"
#include "antwalk/geodesic.hpp"
#include "antwalk/graph_io.hpp"
#include "antwalk/sp_expression.hpp"
#include "antwalk/standard_graphs.hpp"
#include "oracles.hpp"

using namespace antwalk;

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(Graph(1, {}, 0, 0), GraphError);
  EXPECT_THROW(Graph(2, {{0, 1}}, 0, 0), GraphError);
  EXPECT_THROW(Graph(2, {{0, 0}}, 0, 1), GraphError);
  EXPECT_THROW(Graph(3, {{0, 1}}, 0, 1), GraphError);  // vertex 2 isolated
  EXPECT_THROW(Graph(2, {{0, 5}}, 0, 1), GraphError);
}

TEST(Graph, IncidenceListsEveryEdgeTwice) {
  const Graph g = losange();
  std::size_t total = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (const auto& inc : g.incident(v)) {
      EXPECT_TRUE(g.endpoints(inc.edge).touches(v));
      EXPECT_EQ(g.endpoints(inc.edge).other(v), inc.neighbor);
      ++total;
    }
  }
  EXPECT_EQ(total, 2 * g.edge_count());
}

TEST(Graph, ParallelEdgesStayDistinct) {
  const Graph g(2, {{0, 1}, {0, 1}, {1, 0}}, 0, 1);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.incident(0).size(), 3u);
}

TEST(StandardGraphs, Losange) {
  const Graph g = losange();
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 5u);
  using namespace losange_edge;
  using namespace losange_vertex;
  EXPECT_TRUE(g.endpoints(kNestLeft).touches(kNest) && g.endpoints(kNestLeft).touches(kLeft));
  EXPECT_TRUE(g.endpoints(kLeftFood).touches(kLeft) && g.endpoints(kLeftFood).touches(kFood));
  EXPECT_TRUE(g.endpoints(kMiddle).touches(kLeft) && g.endpoints(kMiddle).touches(kRight));
  EXPECT_TRUE(g.endpoints(kNestRight).touches(kNest) && g.endpoints(kNestRight).touches(kRight));
  EXPECT_TRUE(g.endpoints(kRightFood).touches(kRight) && g.endpoints(kRightFood).touches(kFood));
  EXPECT_EQ(h_min(g), 2u);
  EXPECT_EQ(h_max(g), 3u);
}

TEST(StandardGraphs, CounterexampleSizes) {
  for (std::uint32_t L : {1u, 2u, 3u, 10u}) {
    const Graph g = counterexample(L);
    EXPECT_EQ(g.vertex_count(), 2 * L + 1);
    EXPECT_EQ(g.edge_count(), 2 * L + 1);
    EXPECT_EQ(h_min(g), L + 1);
  }
  const Graph g = counterexample(3);
  const CounterexampleLayout lay{3};
  EXPECT_TRUE(g.endpoints(lay.left_edge(0)).touches(g.nest()));
  EXPECT_TRUE(g.endpoints(lay.left_edge(2)).touches(CounterexampleLayout::kJunction));
  EXPECT_TRUE(g.endpoints(lay.right_edge(0)).touches(g.nest()));
  EXPECT_TRUE(g.endpoints(lay.junction_food_edge()).touches(g.food()));
  // Two geodesics, one per side.
  EXPECT_EQ(geodesic_dag(g)->total, 2);
}

TEST(StandardGraphs, DoubleSierpinskiSizes) {
  for (std::uint32_t d = 1; d <= 5; ++d) {
    const Graph g = double_sierpinski(d);
    const std::size_t k = d - 1;
    std::size_t pow3 = 3, pow2 = 1;
    for (std::size_t i = 0; i < k; ++i) {
      pow3 *= 3;
      pow2 *= 2;
    }
    EXPECT_EQ(g.edge_count(), 2 * pow3 - pow2) << "depth " << d;
    EXPECT_EQ(g.vertex_count(), pow3 + 3 - (pow2 + 1)) << "depth " << d;
    EXPECT_EQ(h_min(g), 2 * pow2) << "depth " << d;
  }
  EXPECT_THROW(double_sierpinski(0), GraphError);
}

TEST(StandardGraphs, ByName) {
  EXPECT_EQ(standard_graph("counterexample:4").edge_count(), 9u);
  EXPECT_EQ(standard_graph("sublinear_demo").edge_count(), 3u);
  EXPECT_THROW(standard_graph("counterexample"), GraphError);
  EXPECT_THROW(standard_graph("counterexample:x"), GraphError);
  EXPECT_THROW(standard_graph("cube"), GraphError);
}

TEST(SpExpression, ParseRenderRoundTrip) {
  for (const char* text : {"e", "S(e,e)", "P(S(e,e),e)", "P(S(e,e),S(e,S(e,e)))"}) {
    EXPECT_EQ(parse_sp(text).render(), text);
  }
  EXPECT_EQ(parse_sp(" P ( e , S( e,e ) ) ").render(), "P(e,S(e,e))");
}

TEST(SpExpression, SyntaxErrorsCarryOffsets) {
  auto offset_of = [](const char* text) -> std::size_t {
    try {
      parse_sp(text);
    } catch (const SyntaxError& e) {
      return e.offset();
    }
    return SIZE_MAX;
  };
  EXPECT_EQ(offset_of("S(e,e"), 5u);
  EXPECT_EQ(offset_of("S(e;e)"), 3u);
  EXPECT_EQ(offset_of("Q(e,e)"), 0u);
  EXPECT_EQ(offset_of("P(e,e)x"), 6u);
  EXPECT_EQ(offset_of(""), 0u);
}

TEST(SpExpression, Counts) {
  const auto expr = parse_sp("P(S(e,e),S(e,S(e,e)))");
  EXPECT_EQ(expr.leaf_count(), 5u);
  EXPECT_EQ(expr.depth(), 3u);
}

TEST(SpToGraph, SeriesParallelShapes) {
  const Graph s = sp_to_graph(parse_sp("S(e,S(e,e))"));
  EXPECT_EQ(s.vertex_count(), 4u);
  EXPECT_EQ(h_min(s), 3u);
  const Graph p = sp_to_graph(parse_sp("P(e,P(e,e))"));
  EXPECT_EQ(p.vertex_count(), 2u);
  EXPECT_EQ(p.edge_count(), 3u);
  const Graph a1 = sp_to_graph(parse_sp("P(S(e,e),S(e,S(e,e)))"));
  EXPECT_EQ(h_min(a1), 2u);
  EXPECT_EQ(h_max(a1), 3u);
  EXPECT_EQ(a1.nest(), 0u);
  EXPECT_EQ(a1.food(), 1u);
}

TEST(SpToGraph, RandomTermsMatchOracleStructure) {
  RandomStream rng(3, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto expr = oracle::random_sp(1 + rng.below(12), rng);
    const Graph g = sp_to_graph(expr);
    ASSERT_EQ(g.edge_count(), expr.leaf_count());
    EXPECT_EQ(parse_sp(expr.render()), expr);
    // Every SP edge lies on some N-F simple path.
    std::uint64_t covered = 0;
    const auto paths = oracle::simple_paths(g);
    for (const auto& p : paths) covered |= oracle::mask_of(p);
    EXPECT_EQ(covered, (std::uint64_t{1} << g.edge_count()) - 1);
    std::size_t shortest = SIZE_MAX, longest = 0;
    for (const auto& p : paths) {
      shortest = std::min(shortest, p.size());
      longest = std::max(longest, p.size());
    }
    EXPECT_EQ(h_min(g), shortest);
    EXPECT_EQ(h_max(g), longest);
  }
}

TEST(GraphIo, RoundTrip) {
  for (const Graph& g : {losange(), counterexample(3), double_sierpinski(2)}) {
    const std::string text = format_graph_text(g);
    const Graph back = parse_graph_text(text);
    EXPECT_EQ(format_graph_text(back), text);
    EXPECT_EQ(back.nest(), g.nest());
    EXPECT_EQ(back.food(), g.food());
  }
}

TEST(GraphIo, CommentsAndIdOrder) {
  const Graph g = parse_graph_text(
      "# triangle\nvertex a\nvertex b  # inline\nvertex c\n"
      "edge 1 b c\nedge 0 a b\nedge 2 a c\nnest a\nfood c\n");
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.endpoints(0).u, 0u);
  EXPECT_EQ(g.endpoints(0).v, 1u);
  EXPECT_EQ(h_min(g), 1u);
}

TEST(GraphIo, Errors) {
  auto offset_of = [](const std::string& text) -> std::size_t {
    try {
      parse_graph_text(text);
    } catch (const SyntaxError& e) {
      return e.offset();
    }
    return SIZE_MAX;
  };
  const std::string head = "vertex a\nvertex b\n";
  EXPECT_EQ(offset_of(head + "edge x a b\nnest a\nfood b\n"), head.size());
  EXPECT_EQ(offset_of(head + "edge 0 a z\nnest a\nfood b\n"), head.size());
  EXPECT_EQ(offset_of(head + "wire 0 a b\n"), head.size());
  EXPECT_EQ(offset_of(head + "edge 0 a b\nfood b\n"), (head + "edge 0 a b\nfood b\n").size());
  EXPECT_THROW(parse_graph_text(head + "edge 1 a b\nnest a\nfood b\n"), GraphError);
  EXPECT_THROW(read_graph_file("/nonexistent/graph.txt"), GraphError);
}
