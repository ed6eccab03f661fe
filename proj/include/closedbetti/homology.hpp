#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "closedbetti/graph.hpp"

namespace closedbetti {

/// Coefficient field: GF(p) for a prime p, or the rationals (characteristic 0).
class Field {
 public:
  constexpr Field() = default;
  static Field gf(int p);
  static Field rationals() { return Field(0); }

  int characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  /// Parses "2", "3", ..., or "0" for the rationals.
  static Field parse(const std::string& text);

  friend bool operator==(Field, Field) = default;

 private:
  constexpr explicit Field(int p) : p_(p) {}
  int p_ = 2;
};

std::string to_string(Field field);

/// Reduced homology of the independence complex of a graph given by local
/// adjacency masks (bit j of adjacency[i] set when i ~ j).
///
/// Entry k+1 of the result is dim H~_k for k = -1, 0, ..., dim of the
/// complex. The complex of the empty vertex set is {emptyset}, whose only
/// homology is H~_{-1} = k.
std::vector<int> independence_homology(std::span<const std::uint64_t> adjacency, Field field);

/// Face counts f_{-1}, f_0, f_1, ... of the independence complex.
std::vector<long long> independence_face_counts(std::span<const std::uint64_t> adjacency);

/// dim H~_i(Delta(G); k), indexed from i = -1. Isolated vertices make the
/// complex a cone, in which case every entry is zero.
std::vector<int> reduced_homology_dims(const LabeledGraph& graph, Field field = Field());
std::vector<int> reduced_homology_dims(const BipartiteGraph& graph, Field field = Field());

/// dim H~_i read from a result of reduced_homology_dims; 0 out of range.
int homology_at(const std::vector<int>& dims, int i);

}  // namespace closedbetti
