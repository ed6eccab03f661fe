#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace closedbetti {

/// Bit v-1 is set when vertex v belongs to the set.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << (v - 1); }

/// Members of a vertex set in increasing order.
std::vector<int> members(VertexSet set);

struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple graph whose vertices carry fixed integer labels drawn from 1..n.
///
/// A freshly built graph owns every label in 1..n. Induced subgraphs keep the
/// label bound and the original labels of the surviving vertices, so indices
/// stay comparable across a chain of deletions.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(int n);
  LabeledGraph(int n, std::span<const Edge> edges);

  int label_bound() const { return n_; }
  VertexSet vertices() const { return vertices_; }
  int vertex_count() const;
  bool has_vertex(int v) const;
  bool has_edge(int u, int v) const;

  VertexSet neighbors(int v) const;
  /// Closed neighbourhood N[v].
  VertexSet closed_neighbors(int v) const { return neighbors(v) | vertex_bit(v); }
  int degree(int v) const;

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;
  int edge_count() const;

  LabeledGraph induced(VertexSet keep) const;
  LabeledGraph without(VertexSet drop) const { return induced(vertices_ & ~drop); }

  /// Same graph with vertices renumbered 1..vertex_count() in label order.
  LabeledGraph compacted() const;

  /// Adjacency masks of the surviving vertices, indexed by position in
  /// members(vertices()), with bits referring to those positions.
  std::vector<std::uint64_t> local_adjacency() const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  int n_ = 0;
  VertexSet vertices_ = 0;
  std::vector<VertexSet> adj_;
};

LabeledGraph make_graph(int n, std::initializer_list<Edge> edges);
LabeledGraph path_graph(int n);
LabeledGraph complete_graph(int n);

std::string to_string(const LabeledGraph& graph);

/// Bipartite graph with ordered, labelled parts. Rows of the biadjacency
/// matrix follow x_labels and columns follow y_labels.
class BipartiteGraph {
 public:
  struct Edge {
    int x = 0;
    int y = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
  };

  BipartiteGraph() = default;
  BipartiteGraph(std::vector<int> x_labels, std::vector<int> y_labels);
  BipartiteGraph(std::vector<int> x_labels, std::vector<int> y_labels,
                 std::span<const Edge> edges);

  const std::vector<int>& x_labels() const { return x_labels_; }
  const std::vector<int>& y_labels() const { return y_labels_; }
  int rows() const { return static_cast<int>(x_labels_.size()); }
  int cols() const { return static_cast<int>(y_labels_.size()); }
  int vertex_count() const { return rows() + cols(); }

  bool at(int row, int col) const { return matrix_[row * cols() + col] != 0; }
  bool has_edge(int x, int y) const;
  /// Index of a label within its part, or -1.
  int row_of(int x) const;
  int col_of(int y) const;

  std::vector<Edge> edges() const;
  int edge_count() const;
  std::vector<int> x_neighbors(int x) const;
  std::vector<int> y_neighbors(int y) const;

  BipartiteGraph without(std::span<const int> xs, std::span<const int> ys) const;

  /// Rows become vertices 1..rows(), columns rows()+1..rows()+cols().
  LabeledGraph to_labeled() const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  std::vector<int> x_labels_;
  std::vector<int> y_labels_;
  std::vector<std::uint8_t> matrix_;
};

std::string to_string(const BipartiteGraph::Edge& edge);

/// Maximal connected vertex sets, ordered by least vertex.
std::vector<VertexSet> connected_components(const LabeledGraph& graph);
bool is_connected(const LabeledGraph& graph);

/// Vertices whose removal disconnects the graph. Throws Errc::disconnected
/// when the input is not connected.
VertexSet cut_points(const LabeledGraph& graph);

/// Exact size of a largest induced matching.
int induced_matching_number(const LabeledGraph& graph);
int induced_matching_number(const BipartiteGraph& graph);

}  // namespace closedbetti
