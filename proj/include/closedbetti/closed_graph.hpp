#pragma once

#include <string>
#include <vector>

#include "closedbetti/graph.hpp"

namespace closedbetti {

/// The vector mu_j = n - j - deg_>(j) of a connected closed graph on n
/// vertices. It is stored either in full (n entries, the closed graph itself)
/// or truncated to its first n-1 entries (the form attached to the
/// initial-closed graph). Both forms carry the block size n explicitly.
class MuVector {
 public:
  enum class Flavor {
    connected,     ///< any connected closed graph
    no_cut_point,  ///< a block: additionally mu_{n-2} = 0 and mu_i <= n-i-2
  };

  MuVector() = default;
  MuVector(int n, std::vector<int> values);

  /// Full-length vector of a closed graph on values.size() vertices.
  static MuVector of_graph(std::vector<int> values);

  int n() const { return n_; }
  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<int>& values() const { return values_; }
  /// 1-based access matching the usual mu_1..mu_n indexing; 0 past the end.
  int operator[](int i) const;

  bool is_full() const { return size() == n_; }
  /// s = min{k-1 : mu_k = 0}.
  int s() const;
  bool is_zero() const { return s() == 0; }

  bool satisfies(Flavor flavor) const;
  /// Throws Errc::invalid_mu naming the violated condition.
  void validate(Flavor flavor) const;

  MuVector full() const;
  MuVector truncated() const;

  friend auto operator<=>(const MuVector&, const MuVector&) = default;

 private:
  int n_ = 0;
  std::vector<int> values_;
};

std::string to_string(const MuVector& mu);

bool check_closed(const LabeledGraph& graph);

/// Requires a connected graph closed with respect to its labelling. A graph
/// whose labels are not exactly 1..n is compacted first.
MuVector mu_vector(const LabeledGraph& graph);

/// Closed graph with N_>(i) = [i+1, n - mu_i].
LabeledGraph from_mu(const MuVector& mu, MuVector::Flavor flavor = MuVector::Flavor::connected);

struct ChainBlock {
  int first = 0;  ///< least vertex label
  int last = 0;   ///< greatest vertex label; the block is the interval [first, last]
  MuVector mu;    ///< full-length vector of the block, relabelled 1..size
  bool single_edge = false;

  int size() const { return last - first + 1; }
};

/// Maximal cut-point-free pieces G_1, ..., G_{l+1} of a connected closed
/// graph; G_i and G_{i+1} share exactly the cut point v_i.
struct ChainDecomposition {
  std::vector<ChainBlock> blocks;
  std::vector<int> cut_points;
};

ChainDecomposition chain_decompose(const LabeledGraph& graph);

}  // namespace closedbetti
