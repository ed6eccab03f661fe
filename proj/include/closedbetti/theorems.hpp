#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "closedbetti/betti.hpp"
#include "closedbetti/closed_graph.hpp"
#include "closedbetti/initial_ideal.hpp"
#include "closedbetti/skew_ferrers.hpp"

namespace closedbetti {

enum class PdKind { exact, upper_bound, lower_bound, none };

const char* to_string(PdKind kind);

/// Closed-form projective dimension and extremal data of an initial-closed
/// graph, named by the formulas that produced it.
///
/// `value` is the exact pd when kind == exact, the tightest bound otherwise.
/// `lower` and `upper` are set whenever a bound is known; for an exact
/// prediction both equal `value`.
struct PdPrediction {
  PdKind kind = PdKind::none;
  int value = 0;
  std::optional<int> lower;
  std::optional<int> upper;
  std::vector<std::string> sources;
  std::optional<int> reg;
  /// (p, p + r) of the predicted unique extremal Betti number.
  std::optional<std::pair<int, int>> extremal;
  std::string diagnostic;
};

/// Formula tags used in PdPrediction::sources.
namespace formula {
inline constexpr const char* kCohenMacaulay = "cohen-macaulay";
inline constexpr const char* kSingleRow = "single-nonzero-entry";
inline constexpr const char* kAllOnes = "all-ones";
inline constexpr const char* kEqualMu = "equal-mu";
inline constexpr const char* kStrictlyDecreasing = "strictly-decreasing";
inline constexpr const char* kUpperBound = "max-upper-bound";
inline constexpr const char* kMatchingLowerBound = "matching-lower-bound";
inline constexpr const char* kGluing = "gluing";
}  // namespace formula

/// Projective dimension of the initial-closed graph of a block, from its
/// vector alone (full or truncated form). Every applicable exact formula is
/// evaluated and they must agree (std::logic_error otherwise).
PdPrediction predict_pd(const MuVector& mu);

/// Unique extremal Betti number predicted for the block: (n-1, n) when mu = 0,
/// (p, p+2) when mu_1 = ... = mu_s, (p, p+3) when s >= 2 and
/// mu_s < ... < mu_1 < n-s. kind == none when no hypothesis holds.
PdPrediction predict_extremal(const MuVector& mu);

/// Sums the extremal corners of glued blocks. Every block must carry an
/// exact prediction with an extremal corner, else kind == none.
PdPrediction compose_glued(std::span<const PdPrediction> blocks);

struct Check {
  std::string name;
  std::string scope;  ///< "block k" or "graph"
  std::string predicted;
  std::string observed;
  bool passed = false;
};

struct BlockReport {
  ChainBlock block;
  InitialClosedGraph initial;
  PeelOutcome outcome;
  int induced_matching = 0;
  PdPrediction pd;
  PdPrediction extremal;
  std::optional<BettiTable> oracle;
};

struct VerifyReport {
  LabeledGraph graph;
  Field field;
  std::vector<int> cut_points;
  std::vector<BlockReport> blocks;
  PdPrediction composed;
  /// Oracle table of H' \ {x_n, y_1}; empty when over budget.
  std::optional<BettiTable> oracle;
  std::optional<ExtremalReport> extremal;
  bool oracle_skipped = false;
  std::vector<Check> checks;
  /// Statement about the binomial edge ideal itself, which is never
  /// recomputed: it holds because both quotients share a Hilbert function.
  std::string transferred;

  bool passed() const;
};

/// Runs the oracle and every applicable prediction on a connected closed
/// graph. Over-budget pieces are skipped and the report says so.
VerifyReport verify_graph(const LabeledGraph& graph, const BettiOptions& options = {});

struct ScanEntry {
  MuVector mu;
  int pd = 0;
  int reg = 0;
  std::vector<ExtremalEntry> extremals;
};

struct ScanResult {
  int n_max = 0;
  std::vector<ScanEntry> entries;
  std::vector<ScanEntry> counterexamples;  ///< entries with more than one extremal
};

/// Oracle tables of every initial-closed graph with 2 <= n <= n_max, looking
/// for more than one extremal Betti number.
ScanResult conjecture_scan(int n_max, const BettiOptions& options = {});

/// pd of G, G \ x and G_x = G \ N[x] and the five inequalities relating them.
struct DepthLemmaCheck {
  int vertex = 0;
  int degree = 0;
  int pd_graph = 0;
  int pd_deleted = 0;   ///< pd(G \ x)
  int pd_link = 0;      ///< pd(G_x)
  bool holds[5] = {};

  bool all() const;
};

DepthLemmaCheck check_depth_lemma(const LabeledGraph& graph, int vertex,
                                  const BettiOptions& options = {});

}  // namespace closedbetti
