#include "closedbetti/theorems.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "closedbetti/enumerate.hpp"
#include "closedbetti/error.hpp"

namespace closedbetti {

const char* to_string(PdKind kind) {
  switch (kind) {
    case PdKind::exact: return "exact";
    case PdKind::upper_bound: return "upper_bound";
    case PdKind::lower_bound: return "lower_bound";
    case PdKind::none: return "none";
  }
  return "none";
}

namespace {

bool all_equal_leading(const MuVector& mu, int s) {
  for (int j = 2; j <= s; ++j)
    if (mu[j] != mu[1]) return false;
  return s >= 1;
}

bool strictly_decreasing_leading(const MuVector& mu, int s) {
  for (int j = 2; j <= s; ++j)
    if (mu[j] >= mu[j - 1]) return false;
  return s >= 1 && mu[1] < mu.n() - s;
}

struct MatchingData {
  int matching = 0;
  int pruned = 0;
};

MatchingData run_matching(const MuVector& mu) {
  const auto initial = initial_closed_graph(mu);
  const auto outcome = peel_matching(initial.bipartite, shape_of(initial));
  return {static_cast<int>(outcome.matching.size()), static_cast<int>(outcome.pruned.size())};
}

}  // namespace

PdPrediction predict_pd(const MuVector& input) {
  const MuVector mu = input.full();
  mu.validate(MuVector::Flavor::no_cut_point);
  const int n = mu.n();
  const int s = mu.s();
  const int top = 2 * (n - 1);

  PdPrediction out;
  std::vector<std::pair<std::string, int>> exact;
  if (s == 0) exact.emplace_back(formula::kCohenMacaulay, n - 1);
  if (s == 1) exact.emplace_back(formula::kSingleRow, top - (mu[1] + 1));
  if (s >= 1 && all_equal_leading(mu, s) && mu[1] == 1) {
    exact.emplace_back(formula::kAllOnes, top - (s + 1));
  }
  if (s >= 1 && all_equal_leading(mu, s)) exact.emplace_back(formula::kEqualMu, top - (mu[1] + s));
  if (s >= 1 && strictly_decreasing_leading(mu, s)) {
    exact.emplace_back(formula::kStrictlyDecreasing, top - (mu[s] + s));
  }

  if (s >= 1 && mu[1] < n - s) {
    int bound = 0;
    for (int j = 1; j <= s; ++j) bound = std::max(bound, top - (mu[j] + j));
    out.upper = bound;
    out.sources.push_back(formula::kUpperBound);
  }

  const auto data = run_matching(mu);
  out.lower = top - (data.matching + data.pruned);
  out.sources.push_back(formula::kMatchingLowerBound);

  if (!exact.empty()) {
    for (const auto& [tag, value] : exact) {
      if (value != exact.front().second) {
        throw std::logic_error("exact pd formulas disagree on " + to_string(mu) + ": " +
                               exact.front().first + " vs " + tag);
      }
    }
    out.kind = PdKind::exact;
    out.value = exact.front().second;
    std::vector<std::string> tags;
    for (const auto& [tag, value] : exact) tags.push_back(tag);
    tags.insert(tags.end(), out.sources.begin(), out.sources.end());
    out.sources = std::move(tags);
    if ((out.upper && *out.upper < out.value) || *out.lower > out.value) {
      throw std::logic_error("exact pd of " + to_string(mu) + " lies outside its own bounds");
    }
    out.lower = out.upper = out.value;
  } else if (out.upper) {
    out.kind = PdKind::upper_bound;
    out.value = *out.upper;
  } else {
    out.kind = PdKind::lower_bound;
    out.value = *out.lower;
  }
  return out;
}

PdPrediction predict_extremal(const MuVector& input) {
  const MuVector mu = input.full();
  mu.validate(MuVector::Flavor::no_cut_point);
  const int n = mu.n();
  const int s = mu.s();
  const int top = 2 * (n - 1);

  PdPrediction out;
  if (s == 0) {
    out.kind = PdKind::exact;
    out.value = n - 1;
    out.reg = 1;
    out.sources.push_back(formula::kCohenMacaulay);
  } else if (all_equal_leading(mu, s)) {
    out.kind = PdKind::exact;
    out.value = top - (mu[1] + s);
    out.reg = 2;
    out.sources.push_back(formula::kEqualMu);
  } else if (s >= 2 && strictly_decreasing_leading(mu, s)) {
    out.kind = PdKind::exact;
    out.value = top - (mu[s] + s);
    out.reg = 3;
    out.sources.push_back(formula::kStrictlyDecreasing);
  } else {
    out.diagnostic = to_string(mu) + " is neither zero, constant nor strictly decreasing below n-s";
    return out;
  }
  out.lower = out.upper = out.value;
  out.extremal = std::make_pair(out.value, out.value + *out.reg);
  return out;
}

PdPrediction compose_glued(std::span<const PdPrediction> blocks) {
  PdPrediction out;
  int p = 0;
  int r = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const auto& b = blocks[k];
    if (b.kind != PdKind::exact || !b.extremal || !b.reg) {
      out.diagnostic = "block " + std::to_string(k + 1) + " has no predicted unique extremal";
      return out;
    }
    p += b.extremal->first;
    r += *b.reg;
  }
  if (blocks.empty()) {
    out.diagnostic = "no blocks";
    return out;
  }
  out.kind = PdKind::exact;
  out.value = p;
  out.lower = out.upper = p;
  out.reg = r;
  out.extremal = std::make_pair(p, p + r);
  out.sources.push_back(formula::kGluing);
  return out;
}

// --- verification -------------------------------------------------------

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

std::string corner(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::string join_tags(const std::vector<std::string>& tags) {
  std::string out;
  for (const auto& t : tags) {
    if (t == formula::kUpperBound || t == formula::kMatchingLowerBound) continue;
    out += (out.empty() ? "" : "+") + t;
  }
  return out;
}

void check_block(BlockReport& b, const std::string& scope, std::vector<Check>& checks) {
  const int n = b.initial.n;
  const int u = static_cast<int>(b.outcome.matching.size());
  const int s = static_cast<int>(b.outcome.pruned.size());
  checks.push_back({"matching is a maximum induced matching", scope, std::to_string(u),
                    std::to_string(b.induced_matching), u == b.induced_matching});
  if (!b.oracle) return;
  const auto& table = *b.oracle;
  const int pd = table.pd();
  const int reg = table.reg();

  checks.push_back({"reg equals |U|", scope, std::to_string(u), std::to_string(reg), reg == u});
  const int ci = 2 * (n - 1) - u - s;
  const int cj = 2 * (n - 1) - s;
  const long long cv = table.at(ci, cj);
  checks.push_back({"beta at matching corner is nonzero", scope, "beta" + corner(ci, cj) + " != 0",
                    std::to_string(cv), cv != 0});
  if (b.pd.kind == PdKind::exact) {
    checks.push_back({"pd formula (" + join_tags(b.pd.sources) + ")", scope,
                      std::to_string(b.pd.value), std::to_string(pd), pd == b.pd.value});
  }
  if (b.pd.upper) {
    checks.push_back({"pd upper bound", scope, "<= " + std::to_string(*b.pd.upper),
                      std::to_string(pd), pd <= *b.pd.upper});
  }
  if (b.pd.lower) {
    checks.push_back({"pd lower bound", scope, ">= " + std::to_string(*b.pd.lower),
                      std::to_string(pd), pd >= *b.pd.lower});
  }
  if (b.extremal.extremal) {
    const auto ext = extremal_bettis(table);
    const auto [p, q] = *b.extremal.extremal;
    const bool match = ext.unique && ext.extremals.size() == 1 && ext.extremals[0].i == p &&
                       ext.extremals[0].j == q;
    std::string seen;
    for (const auto& e : ext.extremals) seen += corner(e.i, e.j);
    checks.push_back({"unique extremal (" + join_tags(b.extremal.sources) + ")", scope,
                      corner(p, q), seen, match});
  }
}

}  // namespace

VerifyReport verify_graph(const LabeledGraph& graph, const BettiOptions& options) {
  VerifyReport report;
  report.graph = graph;
  report.field = options.field;
  const auto chain = chain_decompose(graph);
  report.cut_points = chain.cut_points;
  const auto pieces = split_at_cut_points(graph);

  std::vector<PdPrediction> predictions;
  for (std::size_t k = 0; k < chain.blocks.size(); ++k) {
    BlockReport b;
    b.block = chain.blocks[k];
    b.initial = pieces[k];
    b.outcome = peel_matching(b.initial.bipartite, shape_of(b.initial));
    b.induced_matching = induced_matching_number(b.initial.bipartite);
    b.pd = predict_pd(b.block.mu);
    b.extremal = predict_extremal(b.block.mu);
    if (b.initial.vertex_count() <= options.budget) {
      b.oracle = betti_table(b.initial.bipartite, options);
    } else {
      report.oracle_skipped = true;
    }
    check_block(b, "block " + std::to_string(k + 1), report.checks);
    predictions.push_back(b.extremal);
    report.blocks.push_back(std::move(b));
  }
  report.composed = compose_glued(predictions);

  const int n = graph.label_bound();
  const BipartiteGraph trimmed = initial_graph(graph).without(std::vector<int>{n}, std::vector<int>{1});
  if (trimmed.vertex_count() <= options.budget) {
    report.oracle = betti_table(trimmed, options);
    report.extremal = extremal_bettis(*report.oracle);
  } else {
    report.oracle_skipped = true;
  }

  if (report.oracle && report.blocks.size() > 1) {
    // Blocks with a unique extremal corner add up.
    bool all_unique = true;
    int p = 0;
    int r = 0;
    for (const auto& b : report.blocks) {
      if (!b.oracle || !extremal_bettis(*b.oracle).unique) {
        all_unique = false;
        break;
      }
      p += b.oracle->pd();
      r += b.oracle->reg();
    }
    if (all_unique) {
      const auto& t = *report.oracle;
      report.checks.push_back({"pd is the sum over blocks", "graph", std::to_string(p),
                               std::to_string(t.pd()), t.pd() == p});
      report.checks.push_back({"reg is the sum over blocks", "graph", std::to_string(r),
                               std::to_string(t.reg()), t.reg() == r});
      report.checks.push_back({"glued corner is nonzero", "graph",
                               "beta" + corner(p, p + r) + " != 0",
                               std::to_string(t.at(p, p + r)), t.at(p, p + r) != 0});
    }
  }
  if (report.oracle && report.composed.kind == PdKind::exact) {
    const auto [p, q] = *report.composed.extremal;
    const auto& ext = *report.extremal;
    const bool match = ext.unique && ext.extremals.size() == 1 && ext.extremals[0].i == p &&
                       ext.extremals[0].j == q;
    std::string seen;
    for (const auto& e : ext.extremals) seen += corner(e.i, e.j);
    report.checks.push_back({"unique extremal of the glued graph", "graph", corner(p, q), seen, match});
  }
  if (report.composed.kind == PdKind::exact) {
    const auto [p, q] = *report.composed.extremal;
    std::ostringstream os;
    os << "R/J_G has the unique extremal Betti number beta" << corner(p, q)
       << ", equal to that of R/in(J_G) (transferred by Hilbert-function argument, not recomputed)";
    report.transferred = os.str();
  }
  return report;
}

ScanResult conjecture_scan(int n_max, const BettiOptions& options) {
  ScanResult result;
  result.n_max = n_max;
  for (int n = 2; n <= n_max; ++n) {
    for (const auto& mu : enumerate_mu_vectors(n).vectors) {
      const auto table = betti_table(initial_closed_graph(mu).bipartite, options);
      const auto ext = extremal_bettis(table);
      ScanEntry entry{mu.truncated(), table.pd(), table.reg(), ext.extremals};
      if (ext.extremals.size() > 1) result.counterexamples.push_back(entry);
      result.entries.push_back(std::move(entry));
    }
  }
  return result;
}

bool DepthLemmaCheck::all() const {
  return std::all_of(std::begin(holds), std::end(holds), [](bool b) { return b; });
}

DepthLemmaCheck check_depth_lemma(const LabeledGraph& graph, int vertex, const BettiOptions& options) {
  DepthLemmaCheck c;
  c.vertex = vertex;
  c.degree = graph.degree(vertex);
  c.pd_graph = betti_table(graph, options).pd();
  c.pd_deleted = betti_table(graph.without(vertex_bit(vertex)), options).pd();
  c.pd_link = betti_table(graph.without(graph.closed_neighbors(vertex)), options).pd();

  const int colon = c.pd_link + c.degree;  // pd of S/(I : x)
  const int plus = c.pd_deleted + 1;       // pd of S/(I, x)
  c.holds[0] = colon <= std::max(c.pd_graph, c.pd_deleted);
  c.holds[1] = c.pd_graph <= std::max(colon, plus);
  c.holds[2] = plus <= std::max(colon + 1, c.pd_graph);
  c.holds[3] = !(plus <= colon) || c.pd_graph == colon;
  c.holds[4] = !(colon < c.pd_deleted) || c.pd_graph == plus;
  return c;
}

}  // namespace closedbetti
