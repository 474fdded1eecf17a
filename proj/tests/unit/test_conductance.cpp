#include <gtest/gtest.h>

#include <cmath>

#include "antwalk/conductance.hpp"
#include "antwalk/errors.hpp"
#include "antwalk/linear_solve.hpp"
#include "antwalk/sp_expression.hpp"
#include "antwalk/standard_graphs.hpp"
#include "oracles.hpp"

using namespace antwalk;

TEST(Phi, SeriesCombination) {
  EXPECT_DOUBLE_EQ(phi(1.0, 1.0), 0.5);
  EXPECT_DOUBLE_EQ(phi(2.0, 2.0), 1.0);
  EXPECT_NEAR(phi(1.0, 3.0), 0.75, 1e-15);
  EXPECT_THROW(phi(0.0, 1.0), DomainError);
  EXPECT_THROW(phi(1.0, -1.0), DomainError);
}

TEST(SpConductance, BasicShapes) {
  const auto unit = [](std::string_view text) {
    const auto expr = parse_sp(text);
    return sp_conductance(expr, std::vector<double>(expr.leaf_count(), 1.0));
  };
  EXPECT_DOUBLE_EQ(unit("e"), 1.0);
  EXPECT_DOUBLE_EQ(unit("P(e,e)"), 2.0);
  EXPECT_NEAR(unit("S(e,S(e,e))"), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(unit("P(S(e,e),S(e,S(e,e)))"), 0.5 + 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(sp_conductance(parse_sp("S(e,e)"), std::vector<double>{2.0, 6.0}), 1.5, 1e-15);
}

TEST(LaplacianConductance, BalancedWheatstone) {
  const Graph g = losange();
  const auto r = laplacian_conductance(g, std::vector<double>(5, 1.0));
  EXPECT_NEAR(r.value, 1.0, 1e-12);
  EXPECT_LT(r.residual, 1e-12);
}

TEST(LaplacianConductance, UnbalancedLosangeMatchesKirchhoff) {
  const Graph g = losange();
  RandomStream rng(31, 0);
  for (int i = 0; i < 200; ++i) {
    std::vector<double> w(5);
    for (auto& x : w) x = 0.01 + 5 * rng.uniform();
    EXPECT_NEAR(laplacian_conductance(g, w).value, oracle::kirchhoff_conductance(g, w),
                1e-11 * oracle::kirchhoff_conductance(g, w));
  }
}

TEST(LaplacianConductance, ZeroWeightEdgesActAsAbsent) {
  const Graph g = losange();
  // Without the middle edge the losange is two 2-edge paths in parallel.
  const std::vector<double> w{1, 1, 0, 1, 1};
  EXPECT_NEAR(laplacian_conductance(g, w).value, 1.0, 1e-12);
  // Cut off the left vertex entirely.
  EXPECT_THROW(laplacian_conductance(g, std::vector<double>{0, 0, 0, 1, 1}), SolveError);
}

TEST(Conductance, SpReductionAgreesWithLaplacianOnRandomTerms) {
  RandomStream rng(32, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const auto expr = oracle::random_sp(1 + rng.below(20), rng);
    const Graph g = sp_to_graph(expr);
    std::vector<double> w(g.edge_count());
    for (auto& x : w) x = std::exp(4.0 * (rng.uniform() - 0.5));
    const double sp = sp_conductance(expr, w);
    const double lap = laplacian_conductance(g, w).value;
    ASSERT_NEAR(sp, lap, 1e-9 * sp) << expr.render();
    ASSERT_NEAR(sp, oracle::kirchhoff_conductance(g, w), 1e-9 * sp) << expr.render();
  }
}

TEST(Conductance, MonotoneInEachWeight) {
  const Graph g = double_sierpinski(2);
  RandomStream rng(33, 0);
  std::vector<double> w(g.edge_count());
  for (auto& x : w) x = 0.5 + rng.uniform();
  const double base = laplacian_conductance(g, w).value;
  for (std::size_t e = 0; e < w.size(); ++e) {
    auto up = w;
    up[e] += 1.0;
    EXPECT_GE(laplacian_conductance(g, up).value, base - 1e-12);
  }
}

TEST(Evaluator, PicksMethod) {
  const auto expr = parse_sp("P(e,S(e,e))");
  const Graph g = sp_to_graph(expr);
  const WeightState w(g.edge_count());
  EXPECT_EQ(ConductanceEvaluator(g, expr)(w).method, ConductanceMethod::SpReduction);
  EXPECT_EQ(ConductanceEvaluator(g)(w).method, ConductanceMethod::Laplacian);
  EXPECT_NEAR(ConductanceEvaluator(g, expr)(w).value, 1.5, 1e-15);
  EXPECT_NEAR(ConductanceEvaluator(g)(w).value, 1.5, 1e-12);
}

TEST(HittingProbability, GamblersRuinOnPath) {
  // Path 0 - 1 - ... - 6 with unit weights: from k, P(hit 6 before 0) = k / 6.
  std::vector<Endpoints> edges;
  for (VertexId v = 0; v < 6; ++v) edges.push_back({v, v + 1});
  const Graph g(7, edges, 0, 6);
  const std::vector<double> w(6, 1.0);
  const std::vector<VertexId> target{6}, avoid{0};
  for (VertexId k = 1; k < 6; ++k)
    EXPECT_NEAR(hitting_probability(g, w, k, target, avoid), k / 6.0, 1e-12);
  EXPECT_THROW(hitting_probability(g, w, 6, target, avoid), DomainError);
}

TEST(HittingProbability, BiasedPathAndErrors) {
  std::vector<Endpoints> edges{{0, 1}, {1, 2}, {2, 3}};
  const Graph g(4, edges, 0, 3);
  const std::vector<double> w{1.0, 2.0, 4.0};
  // Resistances 1, 1/2, 1/4: P = R(0,1) / R(0,3) = 1 / 1.75.
  const std::vector<VertexId> target{3}, avoid{0};
  EXPECT_NEAR(hitting_probability(g, w, 1, target, avoid), 1.0 / 1.75, 1e-12);
  const std::vector<VertexId> overlap{3};
  EXPECT_THROW(hitting_probability(g, w, 1, target, overlap), DomainError);
  EXPECT_THROW(hitting_probability(g, std::vector<double>{0.0, 1.0, 1.0}, 1, std::vector<VertexId>{0},
                                   std::vector<VertexId>{}),
               GraphError);
}

TEST(IncrementBounds, PathIncrementWithinOneOverLAndOne) {
  RandomStream rng(34, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const auto expr = oracle::random_sp(1 + rng.below(15), rng);
    const Graph g = sp_to_graph(expr);
    std::vector<double> w(g.edge_count());
    for (auto& x : w) x = 1.0 + 10.0 * rng.uniform();
    const auto paths = oracle::simple_paths(g);
    const auto& path = paths[rng.below(paths.size())];
    const auto inc = conductance_increment_bounds(expr, w, path);
    EXPECT_NEAR(inc.lower, 1.0 / path.size(), 1e-15);
    EXPECT_TRUE(inc.within(1e-9)) << expr.render() << " delta " << inc.delta;
    auto after = w;
    for (const EdgeId e : path) after[e] += 1.0;
    EXPECT_NEAR(inc.after, sp_conductance(expr, after), 1e-12 * inc.after);
  }
}

TEST(DenseSolve, SolvesAndRejectsSingular) {
  DenseSystem sys(2);
  sys.matrix = {2, 1, 1, 3};
  sys.rhs = {3, 5};
  const auto sol = solve_dense(sys);
  EXPECT_NEAR(sol.x[0], 0.8, 1e-14);
  EXPECT_NEAR(sol.x[1], 1.4, 1e-14);
  sys.matrix = {1, 2, 2, 4};
  EXPECT_THROW(solve_dense(sys), SolveError);
}
