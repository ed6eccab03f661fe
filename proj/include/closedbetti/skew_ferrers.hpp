#pragma once

#include <vector>

#include "closedbetti/graph.hpp"
#include "closedbetti/initial_ideal.hpp"

namespace closedbetti {

/// Skew Ferrers diagram: row i of an n x m board covers the columns
/// m - lambda_i + 1 .. m - mu_i. A row may be empty (mu_i == lambda_i).
struct SkewFerrersShape {
  int rows = 0;
  int cols = 0;
  std::vector<int> lambda;
  std::vector<int> mu;

  /// Throws Errc::invalid_shape.
  void validate() const;
  int first_col(int row) const { return cols - lambda[row - 1] + 1; }
  int last_col(int row) const { return cols - mu[row - 1]; }

  friend bool operator==(const SkewFerrersShape&, const SkewFerrersShape&) = default;
};

SkewFerrersShape make_shape(std::vector<int> lambda, std::vector<int> mu);

/// n-1 rows, m = n-1, lambda_i = n-i, same mu.
SkewFerrersShape shape_of(const InitialClosedGraph& graph);

BipartiteGraph to_graph(const SkewFerrersShape& shape);

/// One pass of the loop: the pair chosen, everything deleted with it and the
/// zero columns pruned into S afterwards.
struct PeelStep {
  BipartiteGraph::Edge chosen;
  BipartiteGraph before;
  /// before \ N({x, y}), prior to pruning.
  BipartiteGraph after_neighborhood;
  std::vector<int> removed_x;
  std::vector<int> removed_y;
  std::vector<int> pruned;
  /// Edges of `before` incident to the deleted neighbourhood.
  std::vector<BipartiteGraph::Edge> removed_edges;
};

struct RectBlock {
  BipartiteGraph::Edge key;
  std::vector<BipartiteGraph::Edge> edges;
};

struct PeelOutcome {
  std::vector<BipartiteGraph::Edge> matching;  ///< U, in selection order
  std::vector<int> pruned;                     ///< S, as sorted y labels
  std::vector<RectBlock> blocks;               ///< E_e for each e in U, same order
  std::vector<PeelStep> trace;
};

/// Induced matching U and pruning set S of a skew Ferrers graph.
///
/// Repeatedly pairs the largest remaining x with the largest remaining y,
/// deletes the union of their neighbourhoods and then every y whose column has
/// become zero. If the two chosen vertices are not adjacent (or one side is
/// exhausted while the other is not) the loop has no meaning and
/// Errc::not_adjacent is thrown.
PeelOutcome peel_matching(const BipartiteGraph& graph);

/// Same, after checking that `graph` is the graph of `shape`
/// (Errc::shape_mismatch otherwise).
PeelOutcome peel_matching(const BipartiteGraph& graph, const SkewFerrersShape& shape);

/// E_{x_i,y_j} = { x_k y_l in E(H) : k <= i, l <= j, x_k y_l meets N_H(x_i) u N_H(y_j) }
/// for every e in the outcome's matching, in matching order.
std::vector<RectBlock> rect_decomposition(const PeelOutcome& outcome, const BipartiteGraph& graph);

/// Projective dimension max_j (lambda_j + j - 1) of a Ferrers graph.
int ferrers_pd(const std::vector<int>& lambda);

}  // namespace closedbetti
