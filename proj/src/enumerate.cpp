#include "closedbetti/enumerate.hpp"

#include <algorithm>
#include <functional>

#include "closedbetti/error.hpp"

namespace closedbetti {

MuFamily enumerate_mu_vectors(int n) {
  if (n < 2) throw Error(Errc::invalid_mu, "blocks need at least 2 vertices");
  MuFamily family{n, {}};
  std::vector<int> values(n, 0);
  // Only mu_1..mu_{n-3} are free.
  std::function<void(int, int)> fill = [&](int i, int cap) {
    if (i > n - 3) {
      family.vectors.emplace_back(n, values);
      return;
    }
    const int top = std::min(cap, n - 2 - i);
    for (int v = 0; v <= top; ++v) {
      values[i - 1] = v;
      fill(i + 1, v);
    }
    values[i - 1] = 0;
  };
  fill(1, n);
  std::sort(family.vectors.begin(), family.vectors.end(),
            [](const MuVector& a, const MuVector& b) { return a.values() < b.values(); });
  return family;
}

GluedGraph glue_blocks(const std::vector<MuVector>& blocks) {
  if (blocks.empty()) throw Error(Errc::invalid_graph, "nothing to glue");
  int n_total = 1;
  for (const auto& mu : blocks) n_total += mu.n() - 1;
  std::vector<Edge> edges;
  int first = 1;
  for (const auto& mu : blocks) {
    for (const auto& [u, v] : from_mu(mu.full(), MuVector::Flavor::no_cut_point).edges()) {
      edges.push_back({u + first - 1, v + first - 1});
    }
    first += mu.n() - 1;
  }
  GluedGraph out{LabeledGraph(n_total, edges), {}};
  for (const auto& mu : blocks) out.blocks.push_back(mu.full());
  return out;
}

std::vector<GluedGraph> enumerate_glued(int n_total, int max_blocks) {
  if (n_total < 2) throw Error(Errc::invalid_graph, "glued graphs need at least 2 vertices");
  std::vector<std::vector<MuVector>> chains;
  std::vector<MuVector> current;
  // remaining counts vertices still to place after the shared one.
  std::function<void(int)> extend = [&](int remaining) {
    if (remaining == 0) {
      chains.push_back(current);
      return;
    }
    if (static_cast<int>(current.size()) == max_blocks) return;
    for (int size = 2; size - 1 <= remaining; ++size) {
      for (const auto& mu : enumerate_mu_vectors(size).vectors) {
        current.push_back(mu);
        extend(remaining - (size - 1));
        current.pop_back();
      }
    }
  };
  extend(n_total - 1);

  std::sort(chains.begin(), chains.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k].values() != b[k].values()) return a[k].values() < b[k].values();
    }
    return false;
  });

  std::vector<GluedGraph> out;
  out.reserve(chains.size());
  for (const auto& chain : chains) out.push_back(glue_blocks(chain));
  return out;
}

}  // namespace closedbetti
