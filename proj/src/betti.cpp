#include "closedbetti/betti.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <sstream>
#include <thread>

#include "closedbetti/error.hpp"

namespace closedbetti {

BettiTable::BettiTable(int ambient_vars) : ambient_vars_(ambient_vars) { entries_[{0, 0}] = 1; }

long long BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, long long value) {
  if (value == 0) return;
  auto& slot = entries_[{i, j}];
  slot += value;
  if (slot == 0) entries_.erase({i, j});
}

int BettiTable::pd() const {
  int out = 0;
  for (const auto& [key, value] : entries_) out = std::max(out, key.first);
  return out;
}

int BettiTable::reg() const {
  int out = 0;
  for (const auto& [key, value] : entries_) out = std::max(out, key.second - key.first);
  return out;
}

long long BettiTable::total(int i) const {
  long long out = 0;
  for (const auto& [key, value] : entries_)
    if (key.first == i) out += value;
  return out;
}

namespace {

using Accumulator = std::map<BettiTable::Key, long long>;

// Hochster contributions of the subsets W in [begin, end) of a graph on
// adjacency.size() local vertices.
void hochster_range(const std::vector<std::uint64_t>& adjacency, std::uint64_t begin,
                    std::uint64_t end, Field field, Accumulator& out) {
  std::vector<std::uint64_t> local;
  local.reserve(adjacency.size());
  int position[64];
  for (std::uint64_t w = begin; w < end; ++w) {
    if (w == 0) continue;  // beta_{0,0} is seeded by the table itself
    // A vertex without neighbours inside W is a cone point: no homology.
    bool cone = false;
    for (std::uint64_t rest = w; rest != 0 && !cone; rest &= rest - 1) {
      cone = (adjacency[std::countr_zero(rest)] & w) == 0;
    }
    if (cone) continue;

    local.clear();
    int k = 0;
    for (std::uint64_t rest = w; rest != 0; rest &= rest - 1) position[std::countr_zero(rest)] = k++;
    for (std::uint64_t rest = w; rest != 0; rest &= rest - 1) {
      std::uint64_t mask = 0;
      for (std::uint64_t nb = adjacency[std::countr_zero(rest)] & w; nb != 0; nb &= nb - 1) {
        mask |= std::uint64_t{1} << position[std::countr_zero(nb)];
      }
      local.push_back(mask);
    }

    const auto dims = independence_homology(local, field);
    const int j = std::popcount(w);
    for (std::size_t idx = 0; idx < dims.size(); ++idx) {
      if (dims[idx] == 0) continue;
      const int h = static_cast<int>(idx) - 1;  // homological degree of H~
      out[{j - h - 1, j}] += dims[idx];
    }
  }
}

}  // namespace

BettiTable betti_table(const LabeledGraph& graph, const BettiOptions& options) {
  const int k = graph.vertex_count();
  if (k > options.budget || k > 62) {
    throw Error(Errc::budget_exceeded, "graph has " + std::to_string(k) +
                                           " vertices, over the Hochster budget of " +
                                           std::to_string(options.budget));
  }
  const auto adjacency = graph.local_adjacency();
  const std::uint64_t total = std::uint64_t{1} << k;
  const int jobs = static_cast<int>(std::min<std::uint64_t>(std::max(1, options.jobs), total));

  std::vector<Accumulator> partial(jobs);
  if (jobs == 1) {
    hochster_range(adjacency, 0, total, options.field, partial[0]);
  } else {
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t) {
      const std::uint64_t begin = total * t / jobs;
      const std::uint64_t end = total * (t + 1) / jobs;
      workers.emplace_back(hochster_range, std::cref(adjacency), begin, end, options.field,
                           std::ref(partial[t]));
    }
    for (auto& w : workers) w.join();
  }

  BettiTable table(k);
  for (const auto& part : partial)
    for (const auto& [key, value] : part) table.add(key.first, key.second, value);
  return table;
}

BettiTable betti_table(const BipartiteGraph& graph, const BettiOptions& options) {
  return betti_table(graph.to_labeled(), options);
}

BettiTable tensor_product(const BettiTable& a, const BettiTable& b) {
  BettiTable out(a.ambient_vars() + b.ambient_vars());
  out.add(0, 0, -1);
  for (const auto& [ka, va] : a.entries())
    for (const auto& [kb, vb] : b.entries())
      out.add(ka.first + kb.first, ka.second + kb.second, va * vb);
  return out;
}

ExtremalReport extremal_bettis(const BettiTable& table) {
  ExtremalReport report;
  report.pd = table.pd();
  report.reg = table.reg();
  for (const auto& [key, value] : table.entries()) {
    const auto [i, j] = key;
    bool extremal = true;
    for (const auto& [other, v] : table.entries()) {
      const auto [l, r] = other;
      if (l >= i && r >= j + 1 && r - l >= j - i) {
        extremal = false;
        break;
      }
    }
    if (extremal) report.extremals.push_back({i, j, value});
  }
  report.unique = table.at(report.pd, report.pd + report.reg) != 0;
  return report;
}

std::vector<long long> hilbert_numerator(const BettiTable& table) {
  std::vector<long long> coefficients(1, 0);
  for (const auto& [key, value] : table.entries()) {
    const auto [i, j] = key;
    if (j >= static_cast<int>(coefficients.size())) coefficients.resize(j + 1, 0);
    coefficients[j] += (i % 2 == 0 ? value : -value);
  }
  while (coefficients.size() > 1 && coefficients.back() == 0) coefficients.pop_back();
  return coefficients;
}

std::string polynomial_to_string(const std::vector<long long>& coefficients) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    long long c = coefficients[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = c < 0 ? -c : c;
    if (k == 0 || c != 1) os << c;
    if (k >= 1) os << 't';
    if (k >= 2) os << '^' << k;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

std::string format_betti_diagram(const BettiTable& table) {
  const int pd = table.pd();
  const int reg = table.reg();
  std::vector<std::string> labels{"", "total:"};
  for (int r = 0; r <= reg; ++r) labels.push_back(std::to_string(r) + ":");

  std::vector<std::vector<std::string>> grid;
  grid.push_back(std::vector<std::string>(pd + 1));
  std::vector<std::string> totals;
  for (int i = 0; i <= pd; ++i) {
    grid[0][i] = std::to_string(i);
    totals.push_back(std::to_string(table.total(i)));
  }
  grid.push_back(totals);
  for (int r = 0; r <= reg; ++r) {
    std::vector<std::string> row;
    for (int i = 0; i <= pd; ++i) {
      const long long v = table.at(i, i + r);
      row.push_back(v == 0 ? "." : std::to_string(v));
    }
    grid.push_back(row);
  }

  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> width(pd + 1, 0);
  for (const auto& row : grid)
    for (int i = 0; i <= pd; ++i) width[i] = std::max(width[i], row[i].size());

  std::ostringstream os;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    os << std::setw(static_cast<int>(label_width)) << labels[r];
    for (int i = 0; i <= pd; ++i) os << ' ' << std::setw(static_cast<int>(width[i])) << grid[r][i];
    os << '\n';
  }
  return os.str();
}

}  // namespace closedbetti
