#include "closedbetti/initial_ideal.hpp"

#include <numeric>

#include "closedbetti/error.hpp"

namespace closedbetti {

namespace {

std::vector<int> iota_labels(int count, int first = 1) {
  std::vector<int> labels(static_cast<std::size_t>(std::max(count, 0)));
  std::iota(labels.begin(), labels.end(), first);
  return labels;
}

void require_closed(const LabeledGraph& graph) {
  if (!check_closed(graph)) {
    throw Error(Errc::not_closed,
                "the quadratic generators form a Groebner basis only for closed graphs");
  }
}

}  // namespace

BipartiteGraph initial_graph(const LabeledGraph& graph) {
  require_closed(graph);
  const int n = graph.label_bound();
  std::vector<BipartiteGraph::Edge> edges;
  for (const auto& [i, j] : graph.edges()) edges.push_back({i, j});
  return BipartiteGraph(iota_labels(n), iota_labels(n), edges);
}

std::vector<std::pair<int, int>> initial_generators(const LabeledGraph& graph) {
  require_closed(graph);
  std::vector<std::pair<int, int>> out;
  for (const auto& [i, j] : graph.edges()) out.emplace_back(i, j);
  return out;
}

InitialClosedGraph initial_closed_graph(const LabeledGraph& graph) {
  require_closed(graph);
  if (!is_connected(graph)) throw Error(Errc::disconnected, "graph is not connected");
  if (graph.vertex_count() != graph.label_bound()) {
    throw Error(Errc::invalid_graph, "initial-closed graph expects vertices 1..n");
  }
  if (cut_points(graph) != 0) {
    throw Error(Errc::has_cut_point,
                "graph has a cut point; split it with split_at_cut_points first");
  }
  const int n = graph.label_bound();
  std::vector<BipartiteGraph::Edge> edges;
  for (const auto& [i, j] : graph.edges()) edges.push_back({i, j - 1});

  InitialClosedGraph out;
  out.n = n;
  out.bipartite = BipartiteGraph(iota_labels(n - 1), iota_labels(n - 1), edges);
  out.mu = mu_vector(graph).truncated();
  out.x_origin = iota_labels(n - 1);
  out.y_origin = iota_labels(n - 1, 2);
  return out;
}

InitialClosedGraph initial_closed_graph(const MuVector& mu) {
  return initial_closed_graph(from_mu(mu.full(), MuVector::Flavor::no_cut_point));
}

std::vector<InitialClosedGraph> split_at_cut_points(const LabeledGraph& graph) {
  const auto chain = chain_decompose(graph);
  std::vector<InitialClosedGraph> out;
  for (const auto& block : chain.blocks) {
    auto piece = initial_closed_graph(from_mu(block.mu, MuVector::Flavor::no_cut_point));
    for (int& x : piece.x_origin) x += block.first - 1;
    for (int& y : piece.y_origin) y += block.first - 1;
    out.push_back(std::move(piece));
  }
  return out;
}

BipartiteGraph disjoint_union(const std::vector<InitialClosedGraph>& pieces) {
  int rows = 0;
  int cols = 0;
  std::vector<BipartiteGraph::Edge> edges;
  for (const auto& piece : pieces) {
    for (const auto& e : piece.bipartite.edges()) edges.push_back({e.x + rows, e.y + cols});
    rows += piece.bipartite.rows();
    cols += piece.bipartite.cols();
  }
  return BipartiteGraph(iota_labels(rows), iota_labels(cols), edges);
}

}  // namespace closedbetti
