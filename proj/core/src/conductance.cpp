#include "antwalk/conductance.hpp"

#include <string>

#include "antwalk/errors.hpp"
#include "antwalk/linear_solve.hpp"

namespace antwalk {

double phi(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0))
    throw DomainError("phi requires positive arguments, got (" + std::to_string(x) + ", " +
                      std::to_string(y) + ")");
  return 1.0 / (1.0 / x + 1.0 / y);
}

double sp_conductance(const SpExpression& expr, std::span<const double> weights) {
  if (weights.size() != expr.leaf_count())
    throw DomainError("sp_conductance: expected " + std::to_string(expr.leaf_count()) +
                      " weights, got " + std::to_string(weights.size()));
  const auto nodes = expr.nodes();
  std::vector<double> value(nodes.size());
  std::size_t leaf = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& n = nodes[i];
    switch (n.kind) {
      case SpExpression::Kind::Base:
        if (!(weights[leaf] > 0.0)) throw DomainError("sp_conductance: weights must be positive");
        value[i] = weights[leaf++];
        break;
      case SpExpression::Kind::Parallel:
        value[i] = value[n.left] + value[n.right];
        break;
      case SpExpression::Kind::Series:
        value[i] = phi(value[n.left], value[n.right]);
        break;
    }
  }
  return value.back();
}

std::string_view to_string(ConductanceMethod method) noexcept {
  return method == ConductanceMethod::SpReduction ? "sp-reduction" : "laplacian";
}

ConductanceReport laplacian_conductance(const Graph& graph, std::span<const double> weights) {
  if (weights.size() != graph.edge_count())
    throw DomainError("laplacian_conductance: one weight per edge required");
  const VertexId nest = graph.nest();
  const VertexId food = graph.food();
  constexpr std::size_t kBoundary = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(graph.vertex_count(), kBoundary);
  std::size_t unknowns = 0;
  for (VertexId v = 0; v < graph.vertex_count(); ++v)
    if (v != nest && v != food) index[v] = unknowns++;

  DenseSystem system(unknowns);
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const double w = weights[e];
    if (w < 0.0) throw DomainError("laplacian_conductance: negative weight");
    const auto [u, v] = graph.endpoints(e);
    const std::size_t iu = index[u], iv = index[v];
    if (iu != kBoundary) {
      system.at(iu, iu) += w;
      if (iv != kBoundary) system.at(iu, iv) -= w;
      else if (v == nest) system.rhs[iu] += w;
    }
    if (iv != kBoundary) {
      system.at(iv, iv) += w;
      if (iu != kBoundary) system.at(iv, iu) -= w;
      else if (u == nest) system.rhs[iv] += w;
    }
  }
  const DenseSolution solution = solve_dense(system);
  auto voltage = [&](VertexId v) {
    if (v == nest) return 1.0;
    if (v == food) return 0.0;
    return solution.x[index[v]];
  };
  ConductanceReport report;
  report.method = ConductanceMethod::Laplacian;
  report.residual = solution.residual;
  for (const auto& inc : graph.incident(nest))
    report.value += weights[inc.edge] * (1.0 - voltage(inc.neighbor));
  return report;
}

ConductanceReport laplacian_conductance(const Graph& graph, const WeightState& weights) {
  const auto w = weights.as_doubles();
  return laplacian_conductance(graph, w);
}

double hitting_probability(const Graph& graph, std::span<const double> weights, VertexId start,
                           std::span<const VertexId> target, std::span<const VertexId> avoid) {
  if (weights.size() != graph.edge_count())
    throw DomainError("hitting_probability: one weight per edge required");
  enum : std::uint8_t { kFree = 0, kTarget = 1, kAvoid = 2 };
  std::vector<std::uint8_t> role(graph.vertex_count(), kFree);
  for (const VertexId v : target) role.at(v) = kTarget;
  for (const VertexId v : avoid) {
    if (role.at(v) == kTarget) throw DomainError("hitting_probability: target and avoid overlap");
    role[v] = kAvoid;
  }
  if (role.at(start) != kFree)
    throw DomainError("hitting_probability: start must not be absorbing");

  // Transient vertices reachable from start through positive-weight edges.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(graph.vertex_count(), kNone);
  std::vector<VertexId> transient{start};
  index[start] = 0;
  bool absorbing_reachable = false;
  for (std::size_t head = 0; head < transient.size(); ++head) {
    for (const auto& inc : graph.incident(transient[head])) {
      if (!(weights[inc.edge] > 0.0)) continue;
      const VertexId y = inc.neighbor;
      if (role[y] != kFree) {
        absorbing_reachable = true;
      } else if (index[y] == kNone) {
        index[y] = transient.size();
        transient.push_back(y);
      }
    }
  }
  if (!absorbing_reachable)
    throw GraphError("hitting_probability: no absorbing vertex reachable from start");

  DenseSystem system(transient.size());
  for (std::size_t i = 0; i < transient.size(); ++i) {
    for (const auto& inc : graph.incident(transient[i])) {
      const double w = weights[inc.edge];
      if (!(w > 0.0)) continue;
      system.at(i, i) += w;
      const VertexId y = inc.neighbor;
      if (role[y] == kTarget) system.rhs[i] += w;
      else if (role[y] == kFree) system.at(i, index[y]) -= w;
    }
  }
  return solve_dense(system).x[0];
}

ConductanceIncrement conductance_increment_bounds(const SpExpression& expr,
                                                  std::span<const double> weights,
                                                  std::span<const EdgeId> path) {
  if (path.empty()) throw DomainError("conductance_increment_bounds: empty path");
  ConductanceIncrement out;
  out.before = sp_conductance(expr, weights);
  std::vector<double> bumped(weights.begin(), weights.end());
  for (const EdgeId e : path) bumped.at(e) += 1.0;
  out.after = sp_conductance(expr, bumped);
  out.delta = out.after - out.before;
  out.lower = 1.0 / static_cast<double>(path.size());
  out.upper = 1.0;
  return out;
}

ConductanceReport ConductanceEvaluator::operator()(std::span<const double> weights) const {
  if (expr_) return {sp_conductance(*expr_, weights), ConductanceMethod::SpReduction, 0.0};
  return laplacian_conductance(*graph_, weights);
}

ConductanceReport ConductanceEvaluator::operator()(const WeightState& weights) const {
  const auto w = weights.as_doubles();
  return (*this)(w);
}

}  // namespace antwalk
