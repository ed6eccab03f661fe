#include "closedbetti/closed_graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "closedbetti/error.hpp"

namespace closedbetti {

MuVector::MuVector(int n, std::vector<int> values) : n_(n), values_(std::move(values)) {
  if (n < 2) throw Error(Errc::invalid_mu, "mu vectors need a block of at least 2 vertices");
  if (size() != n && size() != n - 1) {
    throw Error(Errc::invalid_mu, "mu vector for n=" + std::to_string(n) + " must have " +
                                      std::to_string(n) + " or " + std::to_string(n - 1) +
                                      " entries, got " + std::to_string(size()));
  }
}

MuVector MuVector::of_graph(std::vector<int> values) {
  const int n = static_cast<int>(values.size());
  return MuVector(n, std::move(values));
}

int MuVector::operator[](int i) const {
  return i >= 1 && i <= size() ? values_[i - 1] : 0;
}

int MuVector::s() const {
  for (int k = 1; k <= size(); ++k)
    if (values_[k - 1] == 0) return k - 1;
  return size();
}

namespace {

std::string mu_violation(const MuVector& mu, MuVector::Flavor flavor) {
  const int n = mu.n();
  for (int i = 1; i <= mu.size(); ++i) {
    if (mu[i] < 0) return "mu_" + std::to_string(i) + " is negative";
    if (i > 1 && mu[i] > mu[i - 1]) {
      return "mu is not decreasing at position " + std::to_string(i);
    }
  }
  if (mu[n - 1] != 0) return "mu_{n-1} must be 0";
  // Every vertex but the last needs a larger neighbour.
  for (int i = 1; i <= std::min(n - 1, mu.size()); ++i) {
    if (mu[i] > n - i - 1) return "mu_" + std::to_string(i) + " exceeds n-i-1";
  }
  if (flavor == MuVector::Flavor::no_cut_point) {
    if (n >= 3 && mu[n - 2] != 0) return "mu_{n-2} must be 0 for a block without cut point";
    for (int i = 1; i <= n - 2; ++i) {
      if (mu[i] > n - i - 2) return "mu_" + std::to_string(i) + " exceeds n-i-2";
    }
  }
  return {};
}

}  // namespace

bool MuVector::satisfies(Flavor flavor) const { return mu_violation(*this, flavor).empty(); }

void MuVector::validate(Flavor flavor) const {
  if (auto why = mu_violation(*this, flavor); !why.empty()) {
    throw Error(Errc::invalid_mu, to_string(*this) + ": " + why);
  }
}

MuVector MuVector::full() const {
  if (is_full()) return *this;
  auto values = values_;
  values.push_back(0);
  return MuVector(n_, std::move(values));
}

MuVector MuVector::truncated() const {
  if (!is_full()) return *this;
  return MuVector(n_, std::vector<int>(values_.begin(), values_.end() - 1));
}

std::string to_string(const MuVector& mu) {
  std::ostringstream os;
  os << '(';
  for (int i = 1; i <= mu.size(); ++i) os << (i > 1 ? "," : "") << mu[i];
  os << ')';
  return os.str();
}

bool check_closed(const LabeledGraph& graph) {
  for (int i : members(graph.vertices())) {
    const VertexSet nbrs = graph.neighbors(i);
    const VertexSet below = nbrs & (vertex_bit(i) - 1);
    const VertexSet above = nbrs & ~below;
    for (VertexSet side : {below, above}) {
      for (int j : members(side)) {
        // Every other same-side neighbour of i must be adjacent to j.
        if ((side & ~vertex_bit(j) & ~graph.neighbors(j)) != 0) return false;
      }
    }
  }
  return true;
}

MuVector mu_vector(const LabeledGraph& input) {
  const LabeledGraph graph =
      input.vertex_count() == input.label_bound() ? input : input.compacted();
  const int n = graph.label_bound();
  if (n < 2) throw Error(Errc::invalid_graph, "mu vectors need at least 2 vertices");
  if (!is_connected(graph)) throw Error(Errc::disconnected, "graph is not connected");
  if (!check_closed(graph)) {
    throw Error(Errc::not_closed, "graph is not closed with respect to its labelling");
  }
  std::vector<int> values(n);
  for (int j = 1; j <= n; ++j) {
    const int greater = std::popcount(graph.neighbors(j) & ~((vertex_bit(j) << 1) - 1));
    values[j - 1] = n - j - greater;
  }
  return MuVector(n, std::move(values));
}

LabeledGraph from_mu(const MuVector& mu, MuVector::Flavor flavor) {
  mu.validate(flavor);
  const int n = mu.n();
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n - mu[i]; ++j) edges.push_back({i, j});
  return LabeledGraph(n, edges);
}

ChainDecomposition chain_decompose(const LabeledGraph& graph) {
  if (!is_connected(graph)) throw Error(Errc::disconnected, "graph is not connected");
  if (!check_closed(graph)) {
    throw Error(Errc::not_closed, "graph is not closed with respect to its labelling");
  }
  if (graph.vertex_count() != graph.label_bound()) {
    throw Error(Errc::invalid_graph, "chain decomposition expects vertices 1..n");
  }
  ChainDecomposition out;
  out.cut_points = members(cut_points(graph));

  std::vector<int> bounds{1};
  bounds.insert(bounds.end(), out.cut_points.begin(), out.cut_points.end());
  bounds.push_back(graph.label_bound());

  int covered = 0;
  for (std::size_t b = 0; b + 1 < bounds.size(); ++b) {
    ChainBlock block;
    block.first = bounds[b];
    block.last = bounds[b + 1];
    const VertexSet interval = ((vertex_bit(block.last) << 1) - 1) & ~(vertex_bit(block.first) - 1);
    const LabeledGraph piece = graph.induced(interval);
    // The decomposition of a closed graph is forced; anything else means the
    // labelling assumption broke.
    if (!is_connected(piece) || cut_points(piece) != 0) {
      throw Error(Errc::not_closed, "block [" + std::to_string(block.first) + "," +
                                        std::to_string(block.last) +
                                        "] is not a cut-point-free interval");
    }
    covered += piece.edge_count();
    block.mu = mu_vector(piece);
    block.single_edge = block.size() == 2;
    out.blocks.push_back(std::move(block));
  }

  if (covered != graph.edge_count()) {
    throw Error(Errc::not_closed, "an edge crosses a cut point");
  }
  return out;
}

}  // namespace closedbetti
