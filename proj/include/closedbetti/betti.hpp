#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "closedbetti/graph.hpp"
#include "closedbetti/homology.hpp"

namespace closedbetti {

/// Graded Betti numbers beta_{i,j} of S/I for a squarefree monomial ideal I
/// in a polynomial ring with `ambient_vars` variables. Only nonzero entries
/// are stored; beta_{0,0} = 1 is always present.
class BettiTable {
 public:
  using Key = std::pair<int, int>;  ///< (homological degree i, internal degree j)

  BettiTable() = default;
  explicit BettiTable(int ambient_vars);

  int ambient_vars() const { return ambient_vars_; }
  long long at(int i, int j) const;
  /// Adds to an entry; entries that reach zero are dropped.
  void add(int i, int j, long long value);
  const std::map<Key, long long>& entries() const { return entries_; }

  /// max{i : beta_{i,j} != 0}
  int pd() const;
  /// max{j - i : beta_{i,j} != 0}
  int reg() const;
  /// Sum over j of beta_{i,j}.
  long long total(int i) const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  int ambient_vars_ = 0;
  std::map<Key, long long> entries_;
};

struct BettiOptions {
  Field field;
  /// Largest vertex count accepted; the subset sum has 2^|V| terms.
  int budget = 16;
  /// Worker threads splitting the subset range; the result does not depend on it.
  int jobs = 1;
};

/// Betti table of the edge ideal via the Hochster formula
/// beta_{i,j} = sum_{|W| = j} dim H~_{j-i-1}(Delta(G[W])).
/// Throws Errc::budget_exceeded above options.budget vertices.
BettiTable betti_table(const LabeledGraph& graph, const BettiOptions& options = {});
BettiTable betti_table(const BipartiteGraph& graph, const BettiOptions& options = {});

/// beta(G1 disjoint-union G2) from the component tables.
BettiTable tensor_product(const BettiTable& a, const BettiTable& b);

struct ExtremalEntry {
  int i = 0;
  int j = 0;
  long long value = 0;

  friend auto operator<=>(const ExtremalEntry&, const ExtremalEntry&) = default;
};

struct ExtremalReport {
  std::vector<ExtremalEntry> extremals;
  bool unique = false;
  int pd = 0;
  int reg = 0;
};

/// Nonzero beta_{i,j} with beta_{l,r} = 0 whenever l >= i, r >= j+1 and
/// r - l >= j - i. The table has a unique extremal entry exactly when
/// beta_{pd, pd+reg} != 0.
ExtremalReport extremal_bettis(const BettiTable& table);

/// Coefficients c_0, c_1, ... of sum_{i,j} (-1)^i beta_{i,j} t^j, the numerator
/// of the Hilbert series over (1-t)^ambient_vars. Trailing zeros are trimmed.
std::vector<long long> hilbert_numerator(const BettiTable& table);

std::string polynomial_to_string(const std::vector<long long>& coefficients);

/// Macaulay2-style diagram: columns i, rows j - i, zeros printed as ".".
std::string format_betti_diagram(const BettiTable& table);

}  // namespace closedbetti
