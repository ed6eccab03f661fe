#include "closedbetti/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "closedbetti/betti.hpp"
#include "closedbetti/closed_graph.hpp"
#include "closedbetti/enumerate.hpp"
#include "closedbetti/error.hpp"
#include "closedbetti/initial_ideal.hpp"
#include "closedbetti/skew_ferrers.hpp"
#include "closedbetti/theorems.hpp"

namespace closedbetti::cli {

namespace {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFieldEnv = "CLOSEDBETTI_FIELD";

/// Malformed input, reported as "source:line:column: message".
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Where a piece of text came from, for diagnostics.
struct Origin {
  std::string source;
  int line = 1;
  int column = 1;  ///< column of the first character of the text
};

[[noreturn]] void fail_at(const Origin& at, std::size_t offset, const std::string& message) {
  std::ostringstream os;
  os << at.source << ":" << at.line << ":" << at.column + static_cast<int>(offset) << ": "
     << message;
  throw InputError(os.str());
}

/// Cursor over one line of input that knows its own column.
class Scanner {
 public:
  Scanner(std::string_view text, Origin origin) : text_(text), origin_(std::move(origin)) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  int integer(const char* what) {
    skip_space();
    int value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) fail(std::string(what) + " out of range");
    if (ec != std::errc() || ptr == first) fail(std::string("expected ") + what);
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }
  std::size_t position() {
    skip_space();
    return pos_;
  }
  [[noreturn]] void fail(const std::string& message) const { fail_at(origin_, pos_, message); }
  [[noreturn]] void fail_from(std::size_t start, const std::string& message) const {
    fail_at(origin_, start, message);
  }

 private:
  std::string_view text_;
  Origin origin_;
  std::size_t pos_ = 0;
};

std::vector<int> parse_int_list(std::string_view text, const Origin& origin) {
  Scanner scan(text, origin);
  std::vector<int> out;
  if (scan.done()) scan.fail("expected a comma-separated list of integers");
  do {
    const std::size_t start = scan.position();
    const int v = scan.integer("an integer");
    if (v < 0) scan.fail_from(start, "entries must be non-negative");
    out.push_back(v);
  } while (scan.accept(','));
  if (!scan.done()) scan.fail("unexpected character");
  return out;
}

std::vector<Edge> parse_edge_list(std::string_view text, const Origin& origin) {
  Scanner scan(text, origin);
  std::vector<Edge> out;
  if (scan.done()) return out;
  do {
    const std::size_t start = scan.position();
    const int u = scan.integer("a vertex label");
    if (u < 1 || u > kMaxVertices) scan.fail_from(start, "vertex labels run from 1 to 64");
    scan.expect('-');
    const std::size_t second = scan.position();
    const int v = scan.integer("a vertex label");
    if (v < 1 || v > kMaxVertices) scan.fail_from(second, "vertex labels run from 1 to 64");
    if (u == v) scan.fail_from(start, "loops are not allowed");
    out.push_back({u, v});
  } while (scan.accept(','));
  if (!scan.done()) scan.fail("unexpected character");
  return out;
}

/// Exactly one of: an edge list, a mu vector, a skew shape (lambda, mu).
struct GraphInput {
  enum class Kind { none, edges, mu, shape };
  Kind kind = Kind::none;
  std::optional<int> n;
  std::vector<Edge> edges;
  std::vector<int> mu;
  std::vector<int> lambda;
};

struct RawInput {
  std::optional<std::string> edges;
  std::optional<int> n;
  std::optional<std::string> mu;
  std::optional<std::string> lambda;
};

GraphInput resolve(const RawInput& raw) {
  const Origin edges_at{"--edges"}, mu_at{"--mu"}, lambda_at{"--lambda"};
  GraphInput in;
  in.n = raw.n;
  const std::string where = "flags";
  if (raw.edges && (raw.mu || raw.lambda)) {
    throw InputError(where + ": give either an edge list or a mu vector / skew shape, not both");
  }
  if (raw.lambda && !raw.mu) throw InputError(where + ": a skew shape needs both lambda and mu");
  if (raw.edges) {
    in.kind = GraphInput::Kind::edges;
    in.edges = parse_edge_list(*raw.edges, edges_at);
  } else if (raw.lambda) {
    in.kind = GraphInput::Kind::shape;
    in.lambda = parse_int_list(*raw.lambda, lambda_at);
    in.mu = parse_int_list(*raw.mu, mu_at);
  } else if (raw.mu) {
    in.kind = GraphInput::Kind::mu;
    in.mu = parse_int_list(*raw.mu, mu_at);
  }
  if (in.n && (*in.n < 1 || *in.n > kMaxVertices)) {
    throw InputError(where + ": n must lie between 1 and 64");
  }
  return in;
}

/// Reads "key value" lines; '#' starts a comment. Keys: edges (may repeat),
/// n, mu, lambda.
GraphInput read_input(std::istream& stream, const std::string& source) {
  GraphInput in;
  bool has_edges = false;
  bool has_mu = false;
  bool has_lambda = false;
  std::string line;
  int number = 0;
  while (std::getline(stream, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    const std::size_t end = std::min(line.find_first_of(" \t\r", start), line.size());
    const std::string key = line.substr(start, end - start);
    const std::string value = line.substr(end);
    const Origin at_key{source, number, static_cast<int>(start) + 1};
    const Origin at_value{source, number, static_cast<int>(end) + 1};
    auto once = [&](bool& seen) {
      if (seen) fail_at(at_key, 0, "duplicate '" + key + "'");
      seen = true;
    };
    if (key == "edges") {
      const auto edges = parse_edge_list(value, at_value);
      in.edges.insert(in.edges.end(), edges.begin(), edges.end());
      has_edges = true;
    } else if (key == "mu") {
      once(has_mu);
      in.mu = parse_int_list(value, at_value);
    } else if (key == "lambda") {
      once(has_lambda);
      in.lambda = parse_int_list(value, at_value);
    } else if (key == "n") {
      if (in.n) fail_at(at_key, 0, "duplicate 'n'");
      Scanner scan(value, at_value);
      const int n = scan.integer("an integer");
      if (!scan.done()) scan.fail("unexpected character");
      if (n < 1 || n > kMaxVertices) fail_at(at_value, 0, "n must lie between 1 and 64");
      in.n = n;
    } else {
      fail_at(at_key, 0, "unknown key '" + key + "' (expected edges, n, mu or lambda)");
    }
  }
  if (has_edges && (has_mu || has_lambda)) {
    throw InputError(source + ": give either edges or a mu vector / skew shape, not both");
  }
  if (has_lambda && !has_mu) throw InputError(source + ": a skew shape needs both lambda and mu");
  if (has_edges) in.kind = GraphInput::Kind::edges;
  else if (has_lambda) in.kind = GraphInput::Kind::shape;
  else if (has_mu) in.kind = GraphInput::Kind::mu;
  return in;
}

// ---- building the objects a command works on -------------------------------

MuVector input_mu(const GraphInput& in) {
  return in.n ? MuVector(*in.n, in.mu) : MuVector::of_graph(in.mu);
}

LabeledGraph input_graph(const GraphInput& in) {
  switch (in.kind) {
    case GraphInput::Kind::edges: {
      int n = in.n.value_or(0);
      for (const auto& e : in.edges) n = std::max({n, e.u, e.v});
      if (n == 0) throw Error(Errc::invalid_graph, "empty graph");
      return LabeledGraph(n, in.edges);
    }
    case GraphInput::Kind::mu: {
      const auto mu = input_mu(in);
      mu.validate(MuVector::Flavor::connected);
      return from_mu(mu.full());
    }
    case GraphInput::Kind::shape:
      throw InputError("this command needs an edge list or a mu vector, not a skew shape");
    case GraphInput::Kind::none:
      break;
  }
  throw InputError("no graph given: use --edges, --mu, --lambda with --mu, or --input");
}

SkewFerrersShape input_shape(const GraphInput& in) { return make_shape(in.lambda, in.mu); }

/// Trimmed initial-closed graph of G: H' without the isolated x_n and y_1.
BipartiteGraph trimmed_initial(const LabeledGraph& graph) {
  const int n = graph.label_bound();
  const std::vector<int> xs{n};
  const std::vector<int> ys{1};
  return initial_graph(graph).without(xs, ys);
}

/// Algorithm runs on each block of a closed graph, relabelled as in the
/// disjoint union of the blocks' initial-closed graphs.
PeelOutcome run_blocks(const LabeledGraph& graph) {
  PeelOutcome all;
  int rows = 0;
  int cols = 0;
  for (const auto& piece : split_at_cut_points(graph)) {
    const auto shape = shape_of(piece);
    const auto out = peel_matching(piece.bipartite, shape);
    auto shift = [&](BipartiteGraph::Edge e) { return BipartiteGraph::Edge{e.x + rows, e.y + cols}; };
    auto shift_x = [&](std::vector<int> v) {
      for (int& x : v) x += rows;
      return v;
    };
    auto shift_y = [&](std::vector<int> v) {
      for (int& y : v) y += cols;
      return v;
    };
    for (const auto& e : out.matching) all.matching.push_back(shift(e));
    for (int y : out.pruned) all.pruned.push_back(y + cols);
    for (const auto& b : out.blocks) {
      RectBlock rb{shift(b.key), {}};
      for (const auto& e : b.edges) rb.edges.push_back(shift(e));
      all.blocks.push_back(std::move(rb));
    }
    for (const auto& step : out.trace) {
      PeelStep s;
      s.chosen = shift(step.chosen);
      s.removed_x = shift_x(step.removed_x);
      s.removed_y = shift_y(step.removed_y);
      s.pruned = shift_y(step.pruned);
      for (const auto& e : step.removed_edges) s.removed_edges.push_back(shift(e));
      all.trace.push_back(std::move(s));
    }
    rows += piece.bipartite.rows();
    cols += piece.bipartite.cols();
  }
  std::sort(all.pruned.begin(), all.pruned.end());
  return all;
}

// ---- output helpers ---------------------------------------------------------

Json pair_json(const BipartiteGraph::Edge& e) { return Json::array({e.x, e.y}); }

Json edges_json(const std::vector<BipartiteGraph::Edge>& edges) {
  Json out = Json::array();
  for (const auto& e : edges) out.push_back(pair_json(e));
  return out;
}

Json betti_json(const BettiTable& table) {
  Json out = Json::array();
  for (const auto& [key, value] : table.entries()) out.push_back(Json::array({key.first, key.second, value}));
  return out;
}

Json extremal_json(const ExtremalReport& report) {
  Json out = Json::array();
  for (const auto& e : report.extremals) out.push_back(Json::array({e.i, e.j, e.value}));
  return out;
}

Json alg_json(const PeelOutcome& outcome, bool with_trace) {
  Json out;
  out["U"] = edges_json(outcome.matching);
  out["S"] = outcome.pruned;
  if (!with_trace) return out;
  Json blocks = Json::array();
  for (const auto& b : outcome.blocks) {
    Json jb;
    jb["key"] = pair_json(b.key);
    jb["edges"] = edges_json(b.edges);
    blocks.push_back(std::move(jb));
  }
  out["blocks"] = std::move(blocks);
  Json trace = Json::array();
  for (const auto& step : outcome.trace) {
    Json js;
    js["chosen"] = pair_json(step.chosen);
    js["removed_x"] = step.removed_x;
    js["removed_y"] = step.removed_y;
    js["pruned"] = step.pruned;
    js["removed_edges"] = edges_json(step.removed_edges);
    trace.push_back(std::move(js));
  }
  out["trace"] = std::move(trace);
  return out;
}

std::string pairs_text(const std::vector<BipartiteGraph::Edge>& edges) {
  std::string out;
  for (const auto& e : edges) {
    if (!out.empty()) out += ",";
    out += "(" + std::to_string(e.x) + "," + std::to_string(e.y) + ")";
  }
  return out.empty() ? "{}" : out;
}

std::string set_text(const std::vector<int>& values, const char* prefix = "") {
  std::string out = "{";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ",";
    out += prefix + std::to_string(values[k]);
  }
  return out + "}";
}

std::string edges_text(const std::vector<BipartiteGraph::Edge>& edges) {
  std::string out;
  for (const auto& e : edges) out += (out.empty() ? "" : " ") + to_string(e);
  return out.empty() ? "(none)" : out;
}

std::string extremal_text(const ExtremalReport& report) {
  std::string out;
  for (const auto& e : report.extremals) {
    if (!out.empty()) out += " ";
    out += "beta(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")=" + std::to_string(e.value);
  }
  return out.empty() ? "(none)" : out;
}

void write_alg_text(std::ostream& out, const PeelOutcome& outcome) {
  out << "U = " << pairs_text(outcome.matching) << "\n";
  out << "S = " << set_text(outcome.pruned) << "\n";
  for (const auto& b : outcome.blocks) {
    out << "E(" << b.key.x << "," << b.key.y << ") = " << edges_text(b.edges) << "\n";
  }
  int k = 0;
  for (const auto& step : outcome.trace) {
    out << "step " << ++k << ": choose " << to_string(step.chosen) << ", remove x"
        << set_text(step.removed_x) << " y" << set_text(step.removed_y) << ", prune y"
        << set_text(step.pruned) << "\n";
  }
}

std::string prediction_text(const PdPrediction& p) {
  std::string out = to_string(p.kind);
  if (p.kind != PdKind::none) out += " " + std::to_string(p.value);
  if (!p.sources.empty()) {
    out += " [";
    for (std::size_t k = 0; k < p.sources.size(); ++k) out += (k ? "," : "") + p.sources[k];
    out += "]";
  }
  return out;
}

Json prediction_json(const PdPrediction& p) {
  Json out;
  out["kind"] = to_string(p.kind);
  out["value"] = p.value;
  out["lower"] = p.lower ? Json(*p.lower) : Json(nullptr);
  out["upper"] = p.upper ? Json(*p.upper) : Json(nullptr);
  out["sources"] = p.sources;
  out["reg"] = p.reg ? Json(*p.reg) : Json(nullptr);
  out["extremal"] = p.extremal ? Json::array({p.extremal->first, p.extremal->second}) : Json(nullptr);
  return out;
}

void emit_json(std::ostream& out, const Json& json) { out << json.dump() << "\n"; }

// ---- commands ---------------------------------------------------------------

struct Settings {
  bool json = false;
  BettiOptions betti;
};

int cmd_check(const GraphInput& in, const Settings& cfg, std::ostream& out) {
  const auto graph = input_graph(in);
  const bool connected = is_connected(graph);
  const bool closed = check_closed(graph);
  std::optional<MuVector> mu;
  std::optional<ChainDecomposition> chain;
  if (connected && closed && graph.vertex_count() >= 2) {
    mu = mu_vector(graph);
    if (graph.vertex_count() == graph.label_bound()) chain = chain_decompose(graph);
  }
  if (cfg.json) {
    Json j;
    j["closed"] = closed;
    j["connected"] = connected;
    j["mu"] = mu ? Json(mu->values()) : Json(nullptr);
    if (chain) {
      j["cut_points"] = chain->cut_points;
      Json blocks = Json::array();
      for (const auto& b : chain->blocks) {
        Json jb;
        jb["first"] = b.first;
        jb["last"] = b.last;
        jb["mu"] = b.mu.values();
        jb["single_edge"] = b.single_edge;
        blocks.push_back(std::move(jb));
      }
      j["blocks"] = std::move(blocks);
    }
    emit_json(out, j);
    return 0;
  }
  out << "closed=" << (closed ? "true" : "false") << "\n";
  out << "connected=" << (connected ? "true" : "false") << "\n";
  if (mu) out << "mu=" << to_string(*mu) << "\n";
  if (chain) {
    out << "cut_points=" << set_text(chain->cut_points) << "\n";
    for (const auto& b : chain->blocks) {
      out << "block [" << b.first << "," << b.last << "] mu=" << to_string(b.mu)
          << (b.single_edge ? " single edge" : "") << "\n";
    }
  }
  return 0;
}

int cmd_initial(const GraphInput& in, const Settings& cfg, std::ostream& out) {
  const auto graph = input_graph(in);
  const auto full = initial_graph(graph);
  const auto pieces = split_at_cut_points(graph);
  const auto trimmed = disjoint_union(pieces);
  if (cfg.json) {
    Json j;
    j["n"] = graph.label_bound();
    j["initial"] = edges_json(full.edges());
    Json blocks = Json::array();
    for (const auto& p : pieces) {
      Json jb;
      jb["n"] = p.n;
      jb["mu"] = p.mu.values();
      jb["x_origin"] = p.x_origin;
      jb["y_origin"] = p.y_origin;
      blocks.push_back(std::move(jb));
    }
    j["blocks"] = std::move(blocks);
    j["trimmed"] = edges_json(trimmed.edges());
    emit_json(out, j);
    return 0;
  }
  out << "H' (" << full.edge_count() << " edges): " << edges_text(full.edges()) << "\n";
  int k = 0;
  for (const auto& p : pieces) {
    out << "block " << ++k << ": mu(H)=" << to_string(p.mu) << " x" << set_text(p.x_origin)
        << " y" << set_text(p.y_origin) << "\n";
  }
  out << "H (" << trimmed.edge_count() << " edges): " << edges_text(trimmed.edges()) << "\n";
  return 0;
}

int cmd_alg32(const GraphInput& in, const Settings& cfg, std::ostream& out) {
  PeelOutcome outcome;
  if (in.kind == GraphInput::Kind::shape) {
    const auto shape = input_shape(in);
    outcome = peel_matching(to_graph(shape), shape);
  } else {
    outcome = run_blocks(input_graph(in));
  }
  if (cfg.json) {
    emit_json(out, alg_json(outcome, true));
  } else {
    write_alg_text(out, outcome);
  }
  return 0;
}

int cmd_betti(const GraphInput& in, const Settings& cfg, std::ostream& out) {
  BettiTable table;
  PeelOutcome outcome;
  Json mu_json;
  std::string mu_text;
  if (in.kind == GraphInput::Kind::shape) {
    const auto shape = input_shape(in);
    const auto graph = to_graph(shape);
    table = betti_table(graph, cfg.betti);
    outcome = peel_matching(graph, shape);
    mu_json = shape.mu;
    mu_text = "lambda=" + set_text(shape.lambda) + " mu=" + set_text(shape.mu);
  } else {
    const auto graph = input_graph(in);
    const auto mu = mu_vector(graph);
    table = betti_table(trimmed_initial(graph), cfg.betti);
    outcome = run_blocks(graph);
    mu_json = mu.values();
    mu_text = "mu=" + to_string(mu);
  }
  const auto ext = extremal_bettis(table);
  if (cfg.json) {
    Json j;
    j["mu"] = mu_json;
    j["betti"] = betti_json(table);
    j["pd"] = ext.pd;
    j["reg"] = ext.reg;
    j["extremal"] = extremal_json(ext);
    j["unique_extremal"] = ext.unique;
    j["alg32"] = alg_json(outcome, false);
    emit_json(out, j);
    return 0;
  }
  out << mu_text << " over " << to_string(cfg.betti.field) << "\n";
  out << format_betti_diagram(table);
  out << "pd = " << ext.pd << "\n";
  out << "reg = " << ext.reg << "\n";
  out << "extremal: " << extremal_text(ext) << "\n";
  out << "unique extremal: " << (ext.unique ? "yes" : "no") << "\n";
  out << "hilbert numerator: " << polynomial_to_string(hilbert_numerator(table)) << "\n";
  out << "U = " << pairs_text(outcome.matching) << "\n";
  out << "S = " << set_text(outcome.pruned) << "\n";
  return 0;
}

int cmd_verify(const GraphInput& in, const Settings& cfg, std::ostream& out) {
  const auto report = verify_graph(input_graph(in), cfg.betti);
  const bool ok = report.passed();
  if (cfg.json) {
    Json j;
    j["graph"] = to_string(report.graph);
    j["field"] = to_string(report.field);
    j["cut_points"] = report.cut_points;
    Json blocks = Json::array();
    for (const auto& b : report.blocks) {
      Json jb;
      jb["first"] = b.block.first;
      jb["last"] = b.block.last;
      jb["mu"] = b.initial.mu.values();
      jb["alg32"] = alg_json(b.outcome, false);
      jb["induced_matching"] = b.induced_matching;
      jb["pd"] = prediction_json(b.pd);
      jb["extremal"] = prediction_json(b.extremal);
      if (b.oracle) jb["betti"] = betti_json(*b.oracle);
      blocks.push_back(std::move(jb));
    }
    j["blocks"] = std::move(blocks);
    j["composed"] = prediction_json(report.composed);
    j["oracle_skipped"] = report.oracle_skipped;
    if (report.oracle) j["betti"] = betti_json(*report.oracle);
    if (report.extremal) {
      j["pd"] = report.extremal->pd;
      j["reg"] = report.extremal->reg;
      j["extremal"] = extremal_json(*report.extremal);
      j["unique_extremal"] = report.extremal->unique;
    }
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      Json jc;
      jc["name"] = c.name;
      jc["scope"] = c.scope;
      jc["predicted"] = c.predicted;
      jc["observed"] = c.observed;
      jc["passed"] = c.passed;
      checks.push_back(std::move(jc));
    }
    j["checks"] = std::move(checks);
    j["transferred"] = report.transferred;
    j["passed"] = ok;
    emit_json(out, j);
    return ok ? 0 : 1;
  }
  out << "graph: " << to_string(report.graph) << "\n";
  out << "field: " << to_string(report.field) << "\n";
  out << "cut points: " << set_text(report.cut_points) << "\n";
  int k = 0;
  for (const auto& b : report.blocks) {
    out << "block " << ++k << " [" << b.block.first << "," << b.block.last
        << "]: mu(H)=" << to_string(b.initial.mu) << " U=" << pairs_text(b.outcome.matching)
        << " S=" << set_text(b.outcome.pruned) << " im=" << b.induced_matching << "\n";
    out << "  pd: " << prediction_text(b.pd) << "\n";
    out << "  extremal: " << prediction_text(b.extremal);
    if (b.extremal.extremal) {
      out << " at (" << b.extremal.extremal->first << "," << b.extremal.extremal->second << ")";
    }
    out << "\n";
  }
  if (report.blocks.size() > 1) {
    out << "composed: " << prediction_text(report.composed) << "\n";
  }
  if (report.oracle) out << format_betti_diagram(*report.oracle);
  if (report.extremal) out << "extremal: " << extremal_text(*report.extremal) << "\n";
  if (report.oracle_skipped) out << "oracle skipped: over budget (raise --budget)\n";
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.scope << ": " << c.name << ": predicted "
        << c.predicted << ", observed " << c.observed << "\n";
  }
  if (!report.transferred.empty()) out << report.transferred << "\n";
  out << "result: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

int cmd_enumerate(int n, bool glued, int max_blocks, const Settings& cfg, std::ostream& out) {
  if (!glued) {
    const auto family = enumerate_mu_vectors(n);
    if (cfg.json) {
      Json j;
      j["n"] = n;
      j["count"] = family.vectors.size();
      Json vectors = Json::array();
      for (const auto& mu : family.vectors) vectors.push_back(mu.values());
      j["vectors"] = std::move(vectors);
      emit_json(out, j);
      return 0;
    }
    for (const auto& mu : family.vectors) out << to_string(mu) << "\n";
    out << "count: " << family.vectors.size() << "\n";
    return 0;
  }
  const auto graphs = enumerate_glued(n, max_blocks);
  if (cfg.json) {
    Json j;
    j["n"] = n;
    j["max_blocks"] = max_blocks;
    j["count"] = graphs.size();
    Json list = Json::array();
    for (const auto& g : graphs) {
      Json jg;
      Json blocks = Json::array();
      for (const auto& mu : g.blocks) blocks.push_back(mu.values());
      jg["blocks"] = std::move(blocks);
      jg["mu"] = mu_vector(g.graph).values();
      list.push_back(std::move(jg));
    }
    j["graphs"] = std::move(list);
    emit_json(out, j);
    return 0;
  }
  for (const auto& g : graphs) {
    std::string blocks;
    for (const auto& mu : g.blocks) blocks += (blocks.empty() ? "" : " + ") + to_string(mu);
    out << blocks << "  mu=" << to_string(mu_vector(g.graph)) << "\n";
  }
  out << "count: " << graphs.size() << "\n";
  return 0;
}

int cmd_scan(int n_max, const Settings& cfg, std::ostream& out) {
  const auto result = conjecture_scan(n_max, cfg.betti);
  auto ext_json = [](const std::vector<ExtremalEntry>& list) {
    Json a = Json::array();
    for (const auto& e : list) a.push_back(Json::array({e.i, e.j, e.value}));
    return a;
  };
  if (cfg.json) {
    Json j;
    j["n_max"] = result.n_max;
    j["field"] = to_string(cfg.betti.field);
    Json entries = Json::array();
    for (const auto& e : result.entries) {
      Json je;
      je["n"] = e.mu.n();
      je["mu"] = e.mu.values();
      je["pd"] = e.pd;
      je["reg"] = e.reg;
      je["extremal"] = ext_json(e.extremals);
      entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    Json bad = Json::array();
    for (const auto& e : result.counterexamples) bad.push_back(e.mu.values());
    j["counterexamples"] = std::move(bad);
    emit_json(out, j);
  } else {
    for (const auto& e : result.entries) {
      out << "n=" << e.mu.n() << " mu=" << to_string(e.mu) << " pd=" << e.pd << " reg=" << e.reg
          << " extremal:";
      for (const auto& x : e.extremals) out << " beta(" << x.i << "," << x.j << ")=" << x.value;
      out << "\n";
    }
    out << "vectors: " << result.entries.size() << ", with more than one extremal: "
        << result.counterexamples.size() << "\n";
    for (const auto& e : result.counterexamples) {
      out << "counterexample: n=" << e.mu.n() << " mu=" << to_string(e.mu) << "\n";
    }
  }
  return result.counterexamples.empty() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Betti tables of initial ideals of binomial edge ideals of closed graphs",
               "closedbetti"};
  app.require_subcommand(1);
  app.fallthrough();

  RawInput raw;
  std::optional<std::string> input_file;
  std::string format = "table";
  std::optional<std::string> field_text;
  int budget = 16;
  int jobs = 1;
  bool glued = false;
  int max_blocks = 0;
  int n_max = 7;

  app.add_option("--edges", raw.edges, "edge list, e.g. \"1-2,2-3\"");
  app.add_option("--n", raw.n, "number of vertices (graph or block size)");
  app.add_option("--mu", raw.mu, "mu vector, e.g. 3,1,0,0,0,0 (with --lambda: the skew shape's mu)");
  app.add_option("--lambda", raw.lambda, "row lengths of a skew Ferrers shape");
  app.add_option("--input", input_file, "read the graph from FILE ('-' for stdin)");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--field", field_text, "2, 3 or another prime, or 0 for the rationals");
  app.add_option("--budget", budget, "maximum vertices for the homology oracle")
      ->check(CLI::Range(1, kMaxVertices));
  app.add_option("--jobs", jobs, "worker threads for the homology oracle")->check(CLI::Range(1, 256));

  auto* check = app.add_subcommand("check", "closedness, mu vector and blocks");
  auto* initial = app.add_subcommand("initial", "the initial graph H' and its trimmed form H");
  auto* alg = app.add_subcommand("alg32", "maximum induced matching U, pruned columns S, blocks, trace");
  alg->alias("peel");
  auto* betti = app.add_subcommand("betti", "graded Betti table, pd, reg and extremal Betti numbers");
  auto* verify = app.add_subcommand("verify", "check every applicable formula against the oracle");
  auto* enumerate = app.add_subcommand("enumerate", "mu vectors of all blocks on --n vertices");
  enumerate->add_flag("--glued", glued, "enumerate glued graphs instead of blocks");
  enumerate->add_option("--blocks", max_blocks, "maximum number of blocks when --glued");
  auto* scan = app.add_subcommand("scan", "look for more than one extremal Betti number");
  scan->add_option("--n-max", n_max, "largest block size to scan")->check(CLI::Range(2, 12));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Settings cfg;
    cfg.json = format == "json";
    cfg.betti.budget = budget;
    cfg.betti.jobs = jobs;
    if (field_text) {
      cfg.betti.field = Field::parse(*field_text);
    } else if (const char* env = std::getenv(kFieldEnv); env && *env) {
      cfg.betti.field = Field::parse(env);
    }

    if (enumerate->parsed()) {
      if (!raw.n) throw InputError("flags: enumerate needs --n");
      return cmd_enumerate(*raw.n, glued, max_blocks > 0 ? max_blocks : *raw.n, cfg, out);
    }
    if (scan->parsed()) return cmd_scan(n_max, cfg, out);

    GraphInput graph_in;
    if (input_file) {
      if (raw.edges || raw.mu || raw.lambda) {
        throw InputError("flags: --input cannot be combined with --edges, --mu or --lambda");
      }
      if (*input_file == "-") {
        graph_in = read_input(in, "<stdin>");
      } else {
        std::ifstream file(*input_file);
        if (!file) throw InputError(*input_file + ": cannot open file");
        graph_in = read_input(file, *input_file);
      }
      if (raw.n) {
        if (graph_in.n && *graph_in.n != *raw.n) throw InputError("flags: --n disagrees with the input file");
        graph_in.n = raw.n;
      }
    } else {
      graph_in = resolve(raw);
    }
    if (graph_in.kind == GraphInput::Kind::none) {
      throw InputError("no graph given: use --edges, --mu, --lambda with --mu, or --input");
    }

    if (check->parsed()) return cmd_check(graph_in, cfg, out);
    if (initial->parsed()) return cmd_initial(graph_in, cfg, out);
    if (alg->parsed()) return cmd_alg32(graph_in, cfg, out);
    if (betti->parsed()) return cmd_betti(graph_in, cfg, out);
    if (verify->parsed()) return cmd_verify(graph_in, cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace closedbetti::cli
