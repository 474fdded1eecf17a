#pragma once

// Brute-force reference implementations. Nothing here calls the library's
// solvers or path extraction; graphs are only read through their edge lists.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <tuple>
#include <stdexcept>
#include <vector>

#include "antwalk/graph.hpp"
#include "antwalk/rng.hpp"
#include "antwalk/sp_expression.hpp"
#include "antwalk/walk.hpp"

namespace oracle {

using antwalk::EdgeId;
using antwalk::Graph;
using antwalk::VertexId;

// Gaussian elimination with partial pivoting, row-major n x n.
inline std::vector<double> gauss_solve(std::vector<double> a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
    if (std::abs(a[pivot * n + col]) < 1e-300) throw std::runtime_error("singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[col * n + c], a[pivot * n + c]);
      std::swap(b[col], b[pivot]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] / a[col * n + col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i * n + c] * x[c];
    x[i] = s / a[i * n + i];
  }
  return x;
}

// Walk state: current vertex plus the first-entry edge of every vertex
// (-1 unvisited, -2 for the starting nest) and the set of crossed edges.
struct WalkState {
  VertexId at;
  std::vector<int> entry;
  std::uint64_t crossed;
  bool operator<(const WalkState& o) const {
    return std::tie(at, crossed, entry) < std::tie(o.at, o.crossed, o.entry);
  }
};

// Exact law of the terminal walk state (at F) of the walk from N with edge
// probabilities proportional to `weights`. Solved through the expected
// visit counts of every transient state: (I - P^T) x = e_start.
inline std::map<WalkState, double> terminal_law(const Graph& g, const std::vector<double>& weights,
                                                bool track_entries = true) {
  if (g.edge_count() > 63) throw std::runtime_error("too many edges");
  const auto& edges = g.edges();
  std::vector<std::vector<std::pair<EdgeId, VertexId>>> adj(g.vertex_count());
  for (EdgeId e = 0; e < edges.size(); ++e) {
    adj[edges[e].u].push_back({e, edges[e].v});
    adj[edges[e].v].push_back({e, edges[e].u});
  }
  WalkState start{g.nest(), std::vector<int>(g.vertex_count(), -1), 0};
  start.entry[g.nest()] = -2;
  if (!track_entries) start.entry.clear();

  std::map<WalkState, std::size_t> index;
  std::vector<WalkState> states;
  std::vector<std::vector<std::pair<std::size_t, double>>> out;  // transient -> (target, prob)
  std::map<WalkState, std::size_t> terminal_index;
  std::vector<WalkState> terminals;
  auto intern = [&](const WalkState& s) -> std::pair<std::size_t, bool> {
    if (s.at == g.food()) {
      auto [it, fresh] = terminal_index.emplace(s, terminals.size());
      if (fresh) terminals.push_back(s);
      return {it->second, true};
    }
    auto [it, fresh] = index.emplace(s, states.size());
    if (fresh) {
      states.push_back(s);
      out.emplace_back();
    }
    return {it->second, false};
  };
  intern(start);
  std::vector<std::vector<std::pair<std::size_t, double>>> to_terminal;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const WalkState s = states[i];
    double total = 0.0;
    for (const auto& [e, v] : adj[s.at]) total += weights[e];
    std::vector<std::pair<std::size_t, double>> trans, term;
    for (const auto& [e, v] : adj[s.at]) {
      if (weights[e] == 0.0) continue;
      WalkState t{v, s.entry, s.crossed | (std::uint64_t{1} << e)};
      if (track_entries && t.entry[v] == -1) t.entry[v] = static_cast<int>(e);
      const auto [j, absorbing] = intern(t);
      (absorbing ? term : trans).push_back({j, weights[e] / total});
    }
    out[i] = trans;
    to_terminal.resize(states.size());
    to_terminal[i] = term;
  }
  to_terminal.resize(states.size());
  const std::size_t n = states.size();
  std::vector<double> a(n * n, 0.0), b(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    a[i * n + i] += 1.0;
    for (const auto& [j, p] : out[i]) a[j * n + i] -= p;
  }
  b[0] = 1.0;
  const auto visits = gauss_solve(std::move(a), std::move(b));
  std::map<WalkState, double> law;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [j, p] : to_terminal[i]) law[terminals[j]] += visits[i] * p;
  return law;
}

// All self-avoiding N -> F paths within the allowed edge mask, as edge lists.
inline void simple_paths_from(const Graph& g, VertexId v, std::uint64_t allowed,
                              std::vector<char>& seen, std::vector<EdgeId>& path,
                              std::vector<std::vector<EdgeId>>& out) {
  if (v == g.food()) {
    out.push_back(path);
    return;
  }
  seen[v] = 1;
  const auto& edges = g.edges();
  for (EdgeId e = 0; e < edges.size(); ++e) {
    if (!(allowed >> e & 1)) continue;
    VertexId w;
    if (edges[e].u == v) w = edges[e].v;
    else if (edges[e].v == v) w = edges[e].u;
    else continue;
    if (seen[w]) continue;
    path.push_back(e);
    simple_paths_from(g, w, allowed, seen, path, out);
    path.pop_back();
  }
  seen[v] = 0;
}

inline std::vector<std::vector<EdgeId>> simple_paths(const Graph& g,
                                                     std::uint64_t allowed = ~std::uint64_t{0}) {
  std::vector<std::vector<EdgeId>> out;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<EdgeId> path;
  simple_paths_from(g, g.nest(), allowed, seen, path, out);
  return out;
}

inline std::vector<std::vector<EdgeId>> shortest_paths(const Graph& g,
                                                       std::uint64_t allowed = ~std::uint64_t{0}) {
  auto all = simple_paths(g, allowed);
  if (all.empty()) return all;
  std::size_t best = all.front().size();
  for (const auto& p : all) best = std::min(best, p.size());
  std::erase_if(all, [&](const auto& p) { return p.size() != best; });
  return all;
}

inline std::uint64_t mask_of(const std::vector<EdgeId>& edges) {
  std::uint64_t m = 0;
  for (const EdgeId e : edges) m |= std::uint64_t{1} << e;
  return m;
}

// Exact law of the reinforced edge set under the uniform-geodesic rule.
inline std::map<std::uint64_t, double> uniform_geodesic_law(const Graph& g,
                                                            const std::vector<double>& weights) {
  std::map<std::uint64_t, double> law;
  for (const auto& [state, p] : terminal_law(g, weights, false)) {
    const auto geodesics = shortest_paths(g, state.crossed);
    for (const auto& path : geodesics) law[mask_of(path)] += p / geodesics.size();
  }
  return law;
}

// The "hiker": walk the reversed trajectory from F and, whenever a vertex
// already on the current path is reached again, cut the path back to it.
inline std::vector<EdgeId> hiker_loop_erasure(const antwalk::WalkTrace& trace) {
  std::vector<VertexId> verts(trace.vertices.rbegin(), trace.vertices.rend());
  std::vector<EdgeId> steps(trace.edges.rbegin(), trace.edges.rend());
  std::vector<VertexId> path_v{verts.front()};
  std::vector<EdgeId> path_e;
  for (std::size_t t = 0; t < steps.size(); ++t) {
    const VertexId next = verts[t + 1];
    const auto hit = std::find(path_v.begin(), path_v.end(), next);
    if (hit != path_v.end()) {
      const auto keep = static_cast<std::size_t>(hit - path_v.begin());
      path_v.resize(keep + 1);
      path_e.resize(keep);
    } else {
      path_v.push_back(next);
      path_e.push_back(steps[t]);
    }
  }
  std::reverse(path_e.begin(), path_e.end());
  return path_e;
}

// Law of the loop-erased path: the erasure of the reversed trajectory leaves
// every vertex through its first-entry edge, read off at absorption.
inline std::map<std::vector<EdgeId>, double> loop_erased_law(const Graph& g,
                                                             const std::vector<double>& weights) {
  std::map<std::vector<EdgeId>, double> law;
  const auto& edges = g.edges();
  for (const auto& [state, p] : terminal_law(g, weights, true)) {
    std::vector<EdgeId> path;
    VertexId v = g.food();
    while (v != g.nest()) {
      const auto e = static_cast<EdgeId>(state.entry[v]);
      path.push_back(e);
      v = edges[e].u == v ? edges[e].v : edges[e].u;
    }
    std::reverse(path.begin(), path.end());
    law[path] += p;
  }
  return law;
}

// Random SP term with `leaves` leaves (uniform split sizes, fair S/P choice).
inline antwalk::SpExpression random_sp(std::size_t leaves, antwalk::RandomStream& rng) {
  if (leaves <= 1) return antwalk::SpExpression::base();
  const std::size_t left = 1 + rng.below(leaves - 1);
  auto a = random_sp(left, rng);
  auto b = random_sp(leaves - left, rng);
  return rng.bernoulli(0.5) ? antwalk::SpExpression::series(a, b)
                            : antwalk::SpExpression::parallel(a, b);
}

// Effective conductance by Kirchhoff: ground F, unit voltage at N, solve the
// interior voltages with gauss_solve and sum the current out of N.
inline double kirchhoff_conductance(const Graph& g, const std::vector<double>& w) {
  const std::size_t nv = g.vertex_count();
  std::vector<std::size_t> idx(nv, SIZE_MAX);
  std::size_t k = 0;
  for (VertexId v = 0; v < nv; ++v)
    if (v != g.nest() && v != g.food()) idx[v] = k++;
  const auto& edges = g.edges();
  std::vector<double> volt(nv, 0.0);
  volt[g.nest()] = 1.0;
  if (k > 0) {
    std::vector<double> a(k * k, 0.0), b(k, 0.0);
    for (EdgeId e = 0; e < edges.size(); ++e) {
      const auto [u, v] = edges[e];
      for (const auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
        if (idx[x] == SIZE_MAX) continue;
        a[idx[x] * k + idx[x]] += w[e];
        if (idx[y] != SIZE_MAX) a[idx[x] * k + idx[y]] -= w[e];
        else b[idx[x]] += w[e] * volt[y];
      }
    }
    const auto x = gauss_solve(std::move(a), std::move(b));
    for (VertexId v = 0; v < nv; ++v)
      if (idx[v] != SIZE_MAX) volt[v] = x[idx[v]];
  }
  double current = 0.0;
  for (EdgeId e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    if (u == g.nest()) current += w[e] * (volt[u] - volt[v]);
    else if (v == g.nest()) current += w[e] * (volt[v] - volt[u]);
  }
  return current;
}

}  // namespace oracle
