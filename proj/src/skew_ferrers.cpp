#include "closedbetti/skew_ferrers.hpp"

#include <algorithm>

#include "closedbetti/error.hpp"

namespace closedbetti {

void SkewFerrersShape::validate() const {
  auto fail = [](const std::string& why) { throw Error(Errc::invalid_shape, why); };
  if (rows < 1 || cols < 1) fail("shape needs at least one row and one column");
  if (static_cast<int>(lambda.size()) != rows || static_cast<int>(mu.size()) != rows) {
    fail("lambda and mu need one entry per row");
  }
  if (lambda.front() != cols) fail("lambda_1 must equal the column count");
  for (int i = 1; i < rows; ++i) {
    if (lambda[i] > lambda[i - 1]) fail("lambda is not decreasing");
    if (mu[i] > mu[i - 1]) fail("mu is not decreasing");
  }
  for (int i = 0; i < rows; ++i) {
    if (mu[i] < 0 || lambda[i] < 0) fail("negative entry");
    if (mu[i] > lambda[i]) fail("mu_" + std::to_string(i + 1) + " exceeds lambda_" +
                                std::to_string(i + 1));
  }
}

SkewFerrersShape make_shape(std::vector<int> lambda, std::vector<int> mu) {
  SkewFerrersShape shape;
  shape.rows = static_cast<int>(lambda.size());
  shape.cols = lambda.empty() ? 0 : lambda.front();
  shape.lambda = std::move(lambda);
  shape.mu = std::move(mu);
  shape.validate();
  return shape;
}

SkewFerrersShape shape_of(const InitialClosedGraph& graph) {
  const int n = graph.n;
  std::vector<int> lambda;
  for (int i = 1; i <= n - 1; ++i) lambda.push_back(n - i);
  return make_shape(std::move(lambda), graph.mu.truncated().values());
}

BipartiteGraph to_graph(const SkewFerrersShape& shape) {
  shape.validate();
  std::vector<int> xs(shape.rows);
  std::vector<int> ys(shape.cols);
  for (int i = 0; i < shape.rows; ++i) xs[i] = i + 1;
  for (int j = 0; j < shape.cols; ++j) ys[j] = j + 1;
  std::vector<BipartiteGraph::Edge> edges;
  for (int i = 1; i <= shape.rows; ++i)
    for (int j = shape.first_col(i); j <= shape.last_col(i); ++j) edges.push_back({i, j});
  return BipartiteGraph(std::move(xs), std::move(ys), edges);
}

PeelOutcome peel_matching(const BipartiteGraph& graph) {
  PeelOutcome out;
  BipartiteGraph current = graph;
  while (current.vertex_count() > 0) {
    if (current.rows() == 0 || current.cols() == 0) {
      throw Error(Errc::not_adjacent, "one side of the bipartition is exhausted while " +
                                          std::to_string(current.vertex_count()) +
                                          " vertices remain");
    }
    const int x = current.x_labels().back();
    const int y = current.y_labels().back();
    if (!current.has_edge(x, y)) {
      throw Error(Errc::not_adjacent, "largest remaining vertices x" + std::to_string(x) +
                                          " and y" + std::to_string(y) + " are not adjacent");
    }

    PeelStep step;
    step.chosen = {x, y};
    step.before = current;
    step.removed_x = current.y_neighbors(y);
    step.removed_y = current.x_neighbors(x);
    for (const auto& e : current.edges()) {
      if (std::find(step.removed_x.begin(), step.removed_x.end(), e.x) != step.removed_x.end() ||
          std::find(step.removed_y.begin(), step.removed_y.end(), e.y) != step.removed_y.end()) {
        step.removed_edges.push_back(e);
      }
    }
    step.after_neighborhood = current.without(step.removed_x, step.removed_y);

    const auto& rest = step.after_neighborhood;
    for (int c = 0; c < rest.cols(); ++c) {
      bool zero = true;
      for (int r = 0; r < rest.rows() && zero; ++r) zero = !rest.at(r, c);
      if (zero) step.pruned.push_back(rest.y_labels()[c]);
    }

    current = rest.without({}, step.pruned);
    out.matching.push_back(step.chosen);
    out.pruned.insert(out.pruned.end(), step.pruned.begin(), step.pruned.end());
    out.trace.push_back(std::move(step));
  }
  std::sort(out.pruned.begin(), out.pruned.end());
  out.blocks = rect_decomposition(out, graph);
  return out;
}

PeelOutcome peel_matching(const BipartiteGraph& graph, const SkewFerrersShape& shape) {
  if (!(to_graph(shape) == graph)) {
    throw Error(Errc::shape_mismatch, "graph is not the graph of the given skew shape");
  }
  return peel_matching(graph);
}

std::vector<RectBlock> rect_decomposition(const PeelOutcome& outcome, const BipartiteGraph& graph) {
  std::vector<RectBlock> blocks;
  const auto all_edges = graph.edges();
  for (const auto& key : outcome.matching) {
    const auto nx = graph.y_neighbors(key.y);
    const auto ny = graph.x_neighbors(key.x);
    RectBlock block{key, {}};
    for (const auto& e : all_edges) {
      if (e.x > key.x || e.y > key.y) continue;
      const bool touches = std::find(nx.begin(), nx.end(), e.x) != nx.end() ||
                           std::find(ny.begin(), ny.end(), e.y) != ny.end();
      if (touches) block.edges.push_back(e);
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

int ferrers_pd(const std::vector<int>& lambda) {
  if (lambda.empty()) throw Error(Errc::invalid_shape, "empty partition");
  int best = 0;
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    if (lambda[j] < 1) throw Error(Errc::invalid_shape, "Ferrers rows must be nonempty");
    if (j > 0 && lambda[j] > lambda[j - 1]) {
      throw Error(Errc::invalid_shape, "lambda is not decreasing");
    }
    best = std::max(best, lambda[j] + static_cast<int>(j));
  }
  return best;
}

}  // namespace closedbetti
