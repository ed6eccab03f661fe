#pragma once

#include <utility>
#include <vector>

#include "closedbetti/closed_graph.hpp"
#include "closedbetti/graph.hpp"

namespace closedbetti {

/// Bipartite graph H' whose edge ideal is the lex initial ideal of the
/// binomial edge ideal of a closed graph: x_i -- y_j for every edge {i,j},
/// i < j. Both parts are labelled 1..n, so x_n and y_1 are isolated.
BipartiteGraph initial_graph(const LabeledGraph& graph);

/// Exponent pairs (i, j) of the quadratic generators x_i y_j, in
/// lexicographic order.
std::vector<std::pair<int, int>> initial_generators(const LabeledGraph& graph);

/// H = H' \ {x_n, y_1} with every y_j renamed y_{j-1}. Both parts are
/// labelled 1..n-1 and the edge set is {x_i y_j : i <= j <= n - mu_i - 1}.
struct InitialClosedGraph {
  int n = 0;
  BipartiteGraph bipartite;
  /// Truncated (n-1 entry) vector of the underlying block.
  MuVector mu;
  /// Original H' indices: x_i here is x_{x_origin[i-1]} there, y_j is
  /// y_{y_origin[j-1]}.
  std::vector<int> x_origin;
  std::vector<int> y_origin;

  int vertex_count() const { return 2 * (n - 1); }
};

/// Requires a connected closed graph without cut points; throws
/// Errc::has_cut_point otherwise (use split_at_cut_points).
InitialClosedGraph initial_closed_graph(const LabeledGraph& graph);

/// Initial-closed graph determined by a block vector alone.
InitialClosedGraph initial_closed_graph(const MuVector& mu);

/// One initial-closed graph per block of chain_decompose(graph). The origin
/// maps refer to the H' of the whole graph.
std::vector<InitialClosedGraph> split_at_cut_points(const LabeledGraph& graph);

/// Disjoint union of bipartite graphs, relabelled consecutively part by part.
BipartiteGraph disjoint_union(const std::vector<InitialClosedGraph>& pieces);

}  // namespace closedbetti
