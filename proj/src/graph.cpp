#include "closedbetti/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

#include "closedbetti/error.hpp"

namespace closedbetti {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::invalid_graph: return "invalid_graph";
    case Errc::disconnected: return "disconnected";
    case Errc::not_closed: return "not_closed";
    case Errc::has_cut_point: return "has_cut_point";
    case Errc::invalid_mu: return "invalid_mu";
    case Errc::invalid_shape: return "invalid_shape";
    case Errc::shape_mismatch: return "shape_mismatch";
    case Errc::not_adjacent: return "not_adjacent";
    case Errc::budget_exceeded: return "budget_exceeded";
    case Errc::parse_error: return "parse_error";
  }
  return "unknown";
}

std::vector<int> members(VertexSet set) {
  std::vector<int> out;
  out.reserve(std::popcount(set));
  while (set != 0) {
    out.push_back(std::countr_zero(set) + 1);
    set &= set - 1;
  }
  return out;
}

LabeledGraph::LabeledGraph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(Errc::invalid_graph, "vertex count " + std::to_string(n) + " outside 0.." +
                                         std::to_string(kMaxVertices));
  }
  vertices_ = n == kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

LabeledGraph::LabeledGraph(int n, std::span<const Edge> edges) : LabeledGraph(n) {
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw Error(Errc::invalid_graph, "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                           " has an endpoint outside 1.." + std::to_string(n));
    }
    if (u == v) {
      throw Error(Errc::invalid_graph, "self-loop at vertex " + std::to_string(u));
    }
    if (has_edge(u, v)) {
      throw Error(Errc::invalid_graph,
                  "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    adj_[u - 1] |= vertex_bit(v);
    adj_[v - 1] |= vertex_bit(u);
  }
}

int LabeledGraph::vertex_count() const { return std::popcount(vertices_); }

bool LabeledGraph::has_vertex(int v) const {
  return v >= 1 && v <= n_ && (vertices_ & vertex_bit(v)) != 0;
}

bool LabeledGraph::has_edge(int u, int v) const {
  return has_vertex(u) && has_vertex(v) && (adj_[u - 1] & vertex_bit(v)) != 0;
}

VertexSet LabeledGraph::neighbors(int v) const {
  return has_vertex(v) ? adj_[v - 1] & vertices_ : 0;
}

int LabeledGraph::degree(int v) const { return std::popcount(neighbors(v)); }

std::vector<Edge> LabeledGraph::edges() const {
  std::vector<Edge> out;
  for (int u : members(vertices_)) {
    for (int v : members(neighbors(u))) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

int LabeledGraph::edge_count() const {
  int twice = 0;
  for (int v : members(vertices_)) twice += degree(v);
  return twice / 2;
}

LabeledGraph LabeledGraph::induced(VertexSet keep) const {
  LabeledGraph out = *this;
  out.vertices_ &= keep;
  for (int v = 1; v <= n_; ++v) {
    out.adj_[v - 1] = (out.vertices_ & vertex_bit(v)) ? adj_[v - 1] & out.vertices_ : 0;
  }
  return out;
}

LabeledGraph LabeledGraph::compacted() const {
  const auto labels = members(vertices_);
  std::vector<Edge> renamed;
  for (const auto& [u, v] : edges()) {
    const auto iu = std::lower_bound(labels.begin(), labels.end(), u) - labels.begin();
    const auto iv = std::lower_bound(labels.begin(), labels.end(), v) - labels.begin();
    renamed.push_back({static_cast<int>(iu) + 1, static_cast<int>(iv) + 1});
  }
  return LabeledGraph(static_cast<int>(labels.size()), renamed);
}

std::vector<std::uint64_t> LabeledGraph::local_adjacency() const {
  const auto labels = members(vertices_);
  std::vector<std::uint64_t> out(labels.size(), 0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (adj_[labels[i] - 1] & vertex_bit(labels[j])) out[i] |= std::uint64_t{1} << j;
    }
  }
  return out;
}

LabeledGraph make_graph(int n, std::initializer_list<Edge> edges) {
  return LabeledGraph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

LabeledGraph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({v, v + 1});
  return LabeledGraph(n, edges);
}

LabeledGraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.push_back({u, v});
  return LabeledGraph(n, edges);
}

std::string to_string(const LabeledGraph& graph) {
  std::ostringstream os;
  os << "n=" << graph.label_bound() << " {";
  bool first = true;
  for (const auto& [u, v] : graph.edges()) {
    os << (first ? "" : ",") << u << '-' << v;
    first = false;
  }
  os << '}';
  return os.str();
}

// --- bipartite -------------------------------------------------------------

BipartiteGraph::BipartiteGraph(std::vector<int> x_labels, std::vector<int> y_labels)
    : x_labels_(std::move(x_labels)),
      y_labels_(std::move(y_labels)),
      matrix_(x_labels_.size() * y_labels_.size(), 0) {
  if (!std::is_sorted(x_labels_.begin(), x_labels_.end()) ||
      !std::is_sorted(y_labels_.begin(), y_labels_.end()) ||
      std::adjacent_find(x_labels_.begin(), x_labels_.end()) != x_labels_.end() ||
      std::adjacent_find(y_labels_.begin(), y_labels_.end()) != y_labels_.end()) {
    throw Error(Errc::invalid_graph, "bipartite labels must be strictly increasing");
  }
}

BipartiteGraph::BipartiteGraph(std::vector<int> x_labels, std::vector<int> y_labels,
                               std::span<const Edge> edges)
    : BipartiteGraph(std::move(x_labels), std::move(y_labels)) {
  for (const auto& e : edges) {
    const int r = row_of(e.x);
    const int c = col_of(e.y);
    if (r < 0 || c < 0) {
      throw Error(Errc::invalid_graph, "edge " + to_string(e) + " uses an unknown label");
    }
    if (at(r, c)) throw Error(Errc::invalid_graph, "duplicate edge " + to_string(e));
    matrix_[r * cols() + c] = 1;
  }
}

int BipartiteGraph::row_of(int x) const {
  auto it = std::lower_bound(x_labels_.begin(), x_labels_.end(), x);
  return it != x_labels_.end() && *it == x ? static_cast<int>(it - x_labels_.begin()) : -1;
}

int BipartiteGraph::col_of(int y) const {
  auto it = std::lower_bound(y_labels_.begin(), y_labels_.end(), y);
  return it != y_labels_.end() && *it == y ? static_cast<int>(it - y_labels_.begin()) : -1;
}

bool BipartiteGraph::has_edge(int x, int y) const {
  const int r = row_of(x);
  const int c = col_of(y);
  return r >= 0 && c >= 0 && at(r, c);
}

std::vector<BipartiteGraph::Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  for (int r = 0; r < rows(); ++r)
    for (int c = 0; c < cols(); ++c)
      if (at(r, c)) out.push_back({x_labels_[r], y_labels_[c]});
  return out;
}

int BipartiteGraph::edge_count() const {
  return static_cast<int>(std::count(matrix_.begin(), matrix_.end(), std::uint8_t{1}));
}

std::vector<int> BipartiteGraph::x_neighbors(int x) const {
  std::vector<int> out;
  const int r = row_of(x);
  if (r < 0) return out;
  for (int c = 0; c < cols(); ++c)
    if (at(r, c)) out.push_back(y_labels_[c]);
  return out;
}

std::vector<int> BipartiteGraph::y_neighbors(int y) const {
  std::vector<int> out;
  const int c = col_of(y);
  if (c < 0) return out;
  for (int r = 0; r < rows(); ++r)
    if (at(r, c)) out.push_back(x_labels_[r]);
  return out;
}

BipartiteGraph BipartiteGraph::without(std::span<const int> xs, std::span<const int> ys) const {
  auto drop = [](const std::vector<int>& labels, std::span<const int> gone) {
    std::vector<int> kept;
    for (int l : labels)
      if (std::find(gone.begin(), gone.end(), l) == gone.end()) kept.push_back(l);
    return kept;
  };
  BipartiteGraph out(drop(x_labels_, xs), drop(y_labels_, ys));
  for (int r = 0; r < out.rows(); ++r)
    for (int c = 0; c < out.cols(); ++c)
      out.matrix_[r * out.cols() + c] =
          matrix_[row_of(out.x_labels_[r]) * cols() + col_of(out.y_labels_[c])];
  return out;
}

LabeledGraph BipartiteGraph::to_labeled() const {
  std::vector<closedbetti::Edge> out;
  for (int r = 0; r < rows(); ++r)
    for (int c = 0; c < cols(); ++c)
      if (at(r, c)) out.push_back({r + 1, rows() + c + 1});
  return LabeledGraph(vertex_count(), out);
}

std::string to_string(const BipartiteGraph::Edge& edge) {
  return "{x" + std::to_string(edge.x) + ",y" + std::to_string(edge.y) + "}";
}

// --- queries ---------------------------------------------------------------

std::vector<VertexSet> connected_components(const LabeledGraph& graph) {
  std::vector<VertexSet> out;
  VertexSet unseen = graph.vertices();
  while (unseen != 0) {
    VertexSet component = unseen & -unseen;
    VertexSet frontier = component;
    while (frontier != 0) {
      VertexSet next = 0;
      for (int v : members(frontier)) next |= graph.neighbors(v);
      frontier = next & ~component;
      component |= next;
    }
    out.push_back(component);
    unseen &= ~component;
  }
  return out;
}

bool is_connected(const LabeledGraph& graph) {
  return connected_components(graph).size() <= 1;
}

VertexSet cut_points(const LabeledGraph& graph) {
  if (!is_connected(graph)) {
    throw Error(Errc::disconnected, "cut points are defined for connected graphs only");
  }
  const int n = graph.label_bound();
  std::vector<int> order(n + 1, 0);
  std::vector<int> low(n + 1, 0);
  int clock = 0;
  VertexSet cuts = 0;

  // Tarjan's articulation-point search.
  std::function<void(int, int)> visit = [&](int v, int parent) {
    order[v] = low[v] = ++clock;
    int children = 0;
    for (int w : members(graph.neighbors(v))) {
      if (order[w] == 0) {
        ++children;
        visit(w, v);
        low[v] = std::min(low[v], low[w]);
        if (parent != 0 && low[w] >= order[v]) cuts |= vertex_bit(v);
      } else if (w != parent) {
        low[v] = std::min(low[v], order[w]);
      }
    }
    if (parent == 0 && children > 1) cuts |= vertex_bit(v);
  };
  if (graph.vertices() != 0) visit(std::countr_zero(graph.vertices()) + 1, 0);
  return cuts;
}

namespace {

// Either the lowest remaining vertex stays unmatched, or it is matched to one
// of its neighbours and the closed neighbourhoods of both ends disappear.
int induced_matching_search(const LabeledGraph& graph, VertexSet alive) {
  while (alive != 0) {
    const int v = std::countr_zero(alive) + 1;
    if ((graph.neighbors(v) & alive) != 0) break;
    alive &= ~vertex_bit(v);
  }
  if (alive == 0) return 0;
  const int v = std::countr_zero(alive) + 1;
  int best = induced_matching_search(graph, alive & ~vertex_bit(v));
  // An induced matching uses at most one edge per two remaining vertices.
  for (int w : members(graph.neighbors(v) & alive)) {
    if (best >= std::popcount(alive) / 2) break;
    const VertexSet gone = graph.closed_neighbors(v) | graph.closed_neighbors(w);
    best = std::max(best, 1 + induced_matching_search(graph, alive & ~gone));
  }
  return best;
}

}  // namespace

int induced_matching_number(const LabeledGraph& graph) {
  return induced_matching_search(graph, graph.vertices());
}

int induced_matching_number(const BipartiteGraph& graph) {
  return induced_matching_number(graph.to_labeled());
}

}  // namespace closedbetti
