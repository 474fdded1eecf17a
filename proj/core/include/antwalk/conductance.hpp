#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "antwalk/graph.hpp"
#include "antwalk/sp_expression.hpp"
#include "antwalk/walk.hpp"

namespace antwalk {

/// Series combination 1 / (1/x + 1/y). Throws DomainError unless x, y > 0.
double phi(double x, double y);

/// Bottom-up reduction: parallel adds, series combines with phi. weights[k]
/// is the conductance of leaf k (= edge k of sp_to_graph(expr)).
double sp_conductance(const SpExpression& expr, std::span<const double> weights);

enum class ConductanceMethod { SpReduction, Laplacian };
std::string_view to_string(ConductanceMethod method) noexcept;

struct ConductanceReport {
  double value = 0.0;
  ConductanceMethod method = ConductanceMethod::Laplacian;
  double residual = 0.0;
};

/// Effective N-F conductance from harmonic voltages (V(N) = 1, V(F) = 0):
/// the net current leaving N. Zero-weight edges are treated as absent.
/// Throws SolveError if some vertex is cut off from both N and F.
ConductanceReport laplacian_conductance(const Graph& graph, std::span<const double> weights);
ConductanceReport laplacian_conductance(const Graph& graph, const WeightState& weights);

/// Probability that the walk from `start` (edge choice proportional to
/// weight, parallel edges summed) hits `target` before `avoid`. Zero-weight
/// edges are ignored. Throws DomainError on overlapping sets and GraphError
/// when no absorbing vertex is reachable from start.
double hitting_probability(const Graph& graph, std::span<const double> weights, VertexId start,
                           std::span<const VertexId> target, std::span<const VertexId> avoid);

/// Conductance change after adding 1 to every edge of a self-avoiding N-F
/// path of length L, with the bounds 1/L <= delta <= 1.
struct ConductanceIncrement {
  double before = 0.0;
  double after = 0.0;
  double delta = 0.0;
  double lower = 0.0;
  double upper = 1.0;

  bool within(double slack) const noexcept { return delta >= lower - slack && delta <= upper + slack; }
};

ConductanceIncrement conductance_increment_bounds(const SpExpression& expr,
                                                  std::span<const double> weights,
                                                  std::span<const EdgeId> path);

/// Picks SP reduction when the graph came from an SP expression, the
/// Laplacian solve otherwise.
class ConductanceEvaluator {
 public:
  explicit ConductanceEvaluator(const Graph& graph, std::optional<SpExpression> expr = {})
      : graph_(&graph), expr_(std::move(expr)) {}

  ConductanceReport operator()(std::span<const double> weights) const;
  ConductanceReport operator()(const WeightState& weights) const;

 private:
  const Graph* graph_;
  std::optional<SpExpression> expr_;
};

}  // namespace antwalk
