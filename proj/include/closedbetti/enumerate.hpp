#pragma once

#include <vector>

#include "closedbetti/closed_graph.hpp"
#include "closedbetti/graph.hpp"

namespace closedbetti {

/// Every full-length block vector for n vertices, lexicographically ordered.
struct MuFamily {
  int n = 0;
  std::vector<MuVector> vectors;
};

/// Decreasing sequences with mu_{n-2} = mu_{n-1} = mu_n = 0 and
/// mu_j <= n-2-j; these are exactly the connected closed graphs on n
/// vertices without cut point.
MuFamily enumerate_mu_vectors(int n);

/// A chain of blocks glued at consecutive cut points.
struct GluedGraph {
  LabeledGraph graph;
  std::vector<MuVector> blocks;
};

/// Glues blocks end to end: block k occupies [first_k, first_k + n_k - 1]
/// and shares its last vertex with the next block.
GluedGraph glue_blocks(const std::vector<MuVector>& blocks);

/// All connected closed graphs on n_total vertices built from at most
/// max_blocks blocks, ordered by block count and then blockwise mu order.
std::vector<GluedGraph> enumerate_glued(int n_total, int max_blocks);

}  // namespace closedbetti
