#pragma once

// Independent brute-force oracles and enumerators shared by the test suites.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "closedbetti/closed_graph.hpp"
#include "closedbetti/graph.hpp"
#include "closedbetti/skew_ferrers.hpp"

namespace testing {

using closedbetti::BipartiteGraph;
using closedbetti::Edge;
using closedbetti::LabeledGraph;

/// Every labelled graph on vertices 1..n (n <= 7).
inline void for_each_graph(int n, const std::function<void(const LabeledGraph&)>& visit) {
  std::vector<Edge> pairs;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) pairs.push_back({u, v});
  const std::uint64_t limit = std::uint64_t{1} << pairs.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    edges.clear();
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) edges.push_back(pairs[k]);
    visit(LabeledGraph(n, edges));
  }
}

/// Closedness straight from the definition: for edges {i,j},{i,k} with
/// i < j < k or i > j > k, {j,k} is an edge.
inline bool brute_closed(const LabeledGraph& g) {
  const int n = g.label_bound();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        if (!g.has_edge(i, j) || !g.has_edge(i, k)) continue;
        const bool same_side = (i < j && i < k) || (i > j && i > k);
        if (same_side && !g.has_edge(j, k)) return false;
      }
  return true;
}

/// Number of connected components among the given vertices, by flood fill.
inline int brute_component_count(const LabeledGraph& g, std::vector<int> vertices) {
  std::vector<int> seen;
  int count = 0;
  for (int start : vertices) {
    if (std::find(seen.begin(), seen.end(), start) != seen.end()) continue;
    ++count;
    std::vector<int> stack{start};
    seen.push_back(start);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : vertices) {
        if (g.has_edge(v, w) && std::find(seen.begin(), seen.end(), w) == seen.end()) {
          seen.push_back(w);
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

/// Largest set of edges no two of which share or are joined by an edge,
/// by branching over the edge list.
inline int brute_induced_matching(const std::vector<std::pair<int, int>>& edges,
                                  const std::function<bool(int, int)>& adjacent) {
  std::vector<int> chosen;
  int best = 0;
  auto compatible = [&](const std::pair<int, int>& a, const std::pair<int, int>& b) {
    const int av[2] = {a.first, a.second};
    const int bv[2] = {b.first, b.second};
    for (int p : av)
      for (int q : bv)
        if (p == q || adjacent(p, q)) return false;
    return true;
  };
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    best = std::max(best, static_cast<int>(chosen.size()));
    if (chosen.size() + (edges.size() - k) <= static_cast<std::size_t>(best)) return;
    for (std::size_t e = k; e < edges.size(); ++e) {
      bool ok = true;
      for (int c : chosen) ok = ok && compatible(edges[c], edges[e]);
      if (!ok) continue;
      chosen.push_back(static_cast<int>(e));
      go(e + 1);
      chosen.pop_back();
    }
  };
  go(0);
  return best;
}

inline int brute_induced_matching(const LabeledGraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v);
  return brute_induced_matching(edges, [&](int a, int b) { return g.has_edge(a, b); });
}

/// x labels map to themselves, y labels to 1000 + y.
inline int brute_induced_matching(const BipartiteGraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : g.edges()) edges.emplace_back(e.x, 1000 + e.y);
  return brute_induced_matching(edges, [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return a < 1000 && b >= 1000 && g.has_edge(a, b - 1000);
  });
}

/// Decreasing sequences of length `len` bounded by caps[i] (and by the
/// previous entry), with the listed trailing entries forced to zero.
inline void decreasing_sequences(const std::vector<int>& caps,
                                 const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> values(caps.size(), 0);
  std::function<void(std::size_t, int)> go = [&](std::size_t i, int prev) {
    if (i == caps.size()) {
      visit(values);
      return;
    }
    for (int v = 0; v <= std::min(prev, caps[i]); ++v) {
      values[i] = v;
      go(i + 1, v);
    }
  };
  go(0, 1 << 20);
}

/// Full vectors of connected closed graphs on n vertices:
/// mu_i <= n - i - 1, decreasing, mu_n = 0.
inline std::vector<std::vector<int>> connected_mu_values(int n) {
  std::vector<int> caps(n);
  for (int i = 1; i <= n; ++i) caps[i - 1] = std::max(0, n - i - 1);
  std::vector<std::vector<int>> out;
  decreasing_sequences(caps, [&](const std::vector<int>& v) { out.push_back(v); });
  return out;
}

/// Full vectors of blocks on n vertices: mu_i <= n - i - 2, decreasing.
inline std::vector<std::vector<int>> block_mu_values(int n) {
  std::vector<int> caps(n);
  for (int i = 1; i <= n; ++i) caps[i - 1] = std::max(0, n - i - 2);
  std::vector<std::vector<int>> out;
  decreasing_sequences(caps, [&](const std::vector<int>& v) { out.push_back(v); });
  return out;
}

/// Skew shapes with `rows` rows and `cols` columns: lambda decreasing with
/// lambda_1 = cols, mu decreasing, mu_i <= lambda_i. With `nonempty`,
/// mu_i < lambda_i.
inline void for_each_shape(int rows, int cols, bool nonempty,
                           const std::function<void(const closedbetti::SkewFerrersShape&)>& visit) {
  std::vector<int> lambda(rows), mu(rows);
  std::function<void(int, int)> fill_mu = [&](int i, int prev) {
    if (i == rows) {
      visit(closedbetti::make_shape(lambda, mu));
      return;
    }
    const int top = std::min(prev, nonempty ? lambda[i] - 1 : lambda[i]);
    for (int v = 0; v <= top; ++v) {
      mu[i] = v;
      fill_mu(i + 1, v);
    }
  };
  std::function<void(int, int)> fill_lambda = [&](int i, int prev) {
    if (i == rows) {
      fill_mu(0, cols);
      return;
    }
    for (int v = 1; v <= prev; ++v) {
      if (i == 0 && v != cols) continue;
      lambda[i] = v;
      fill_lambda(i + 1, v);
    }
  };
  fill_lambda(0, cols);
}

inline LabeledGraph random_graph(std::mt19937& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return LabeledGraph(n, edges);
}

/// Entry k of the dims vector holds reduced homology in degree k - 1.
inline int dim_at(const std::vector<int>& dims, int degree) {
  const int k = degree + 1;
  return k >= 0 && k < static_cast<int>(dims.size()) ? dims[k] : 0;
}

}  // namespace testing
