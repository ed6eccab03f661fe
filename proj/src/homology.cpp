#include "closedbetti/homology.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "closedbetti/error.hpp"
#include "closedbetti/linalg.hpp"

namespace closedbetti {

Field Field::gf(int p) {
  if (!linalg::is_prime(p)) {
    throw Error(Errc::parse_error, "field characteristic " + std::to_string(p) + " is not prime");
  }
  return Field(p);
}

Field Field::parse(const std::string& text) {
  int p = 0;
  try {
    std::size_t used = 0;
    p = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw Error(Errc::parse_error, "field must be 0 (rationals) or a prime, got '" + text + "'");
  }
  return p == 0 ? rationals() : gf(p);
}

std::string to_string(Field field) {
  return field.is_rational() ? "QQ" : "GF(" + std::to_string(field.characteristic()) + ")";
}

namespace {

/// Faces of one independence complex grouped by cardinality, with a
/// mask -> position lookup inside each group.
class FaceIndex {
 public:
  void build(std::span<const std::uint64_t> adjacency) {
    width_ = static_cast<int>(adjacency.size());
    for (auto& group : by_size_) group.clear();
    by_size_.resize(static_cast<std::size_t>(width_) + 1);
    dense_ = width_ <= kDenseWidth;
    sparse_.clear();
    if (dense_) position_.resize(std::size_t{1} << width_);

    const std::uint64_t all = width_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width_) - 1;
    walk(adjacency, 0, all);
    while (by_size_.size() > 1 && by_size_.back().empty()) by_size_.pop_back();
  }

  /// Group of faces with `size` vertices (size 0 is the empty face).
  const std::vector<std::uint64_t>& faces(int size) const { return by_size_[size]; }
  int max_size() const { return static_cast<int>(by_size_.size()) - 1; }

  int position(std::uint64_t face) const {
    return dense_ ? position_[face] : sparse_.at(face);
  }

 private:
  static constexpr int kDenseWidth = 22;

  void walk(std::span<const std::uint64_t> adjacency, std::uint64_t face, std::uint64_t allowed) {
    auto& group = by_size_[std::popcount(face)];
    const int pos = static_cast<int>(group.size());
    group.push_back(face);
    if (dense_) {
      position_[face] = pos;
    } else {
      sparse_.emplace(face, pos);
    }
    while (allowed != 0) {
      const int v = std::countr_zero(allowed);
      allowed &= allowed - 1;
      walk(adjacency, face | (std::uint64_t{1} << v), allowed & ~adjacency[v]);
    }
  }

  int width_ = 0;
  bool dense_ = true;
  std::vector<std::vector<std::uint64_t>> by_size_;
  std::vector<int> position_;
  std::unordered_map<std::uint64_t, int> sparse_;
};

/// rank of the boundary map from faces of size k+1 to faces of size k.
int boundary_rank(const FaceIndex& index, int size, Field field, linalg::BitMatrix& scratch) {
  const auto& upper = index.faces(size);
  const auto& lower = index.faces(size - 1);
  if (upper.empty() || lower.empty()) return 0;

  if (field.characteristic() == 2) {
    scratch.reset(static_cast<int>(upper.size()), static_cast<int>(lower.size()));
    for (int r = 0; r < static_cast<int>(upper.size()); ++r) {
      for (std::uint64_t rest = upper[r]; rest != 0; rest &= rest - 1) {
        scratch.set(r, index.position(upper[r] & ~(rest & -rest)));
      }
    }
    return linalg::rank_gf2(scratch);
  }

  std::vector<linalg::SignedRow> rows(upper.size());
  for (std::size_t r = 0; r < upper.size(); ++r) {
    int sign = 1;
    for (std::uint64_t rest = upper[r]; rest != 0; rest &= rest - 1) {
      rows[r].push_back({index.position(upper[r] & ~(rest & -rest)), sign});
      sign = -sign;
    }
  }
  const int cols = static_cast<int>(lower.size());
  return field.is_rational() ? linalg::rank_rational(rows, cols)
                             : linalg::rank_mod_p(rows, cols, field.characteristic());
}

struct Workspace {
  FaceIndex index;
  linalg::BitMatrix scratch;
};

Workspace& workspace() {
  thread_local Workspace ws;
  return ws;
}

}  // namespace

std::vector<long long> independence_face_counts(std::span<const std::uint64_t> adjacency) {
  FaceIndex index;
  index.build(adjacency);
  std::vector<long long> counts;
  for (int k = 0; k <= index.max_size(); ++k) counts.push_back(static_cast<long long>(index.faces(k).size()));
  return counts;
}

std::vector<int> independence_homology(std::span<const std::uint64_t> adjacency, Field field) {
  if (adjacency.size() > 64) throw Error(Errc::budget_exceeded, "more than 64 vertices");
  auto& ws = workspace();
  ws.index.build(adjacency);
  const int top = ws.index.max_size();

  // rank[k] is the rank of the boundary from size-k faces to size-(k-1) faces.
  std::vector<int> rank(static_cast<std::size_t>(top) + 2, 0);
  if (top >= 1) rank[1] = 1;
  for (int k = 2; k <= top; ++k) rank[k] = boundary_rank(ws.index, k, field, ws.scratch);

  std::vector<int> dims(static_cast<std::size_t>(top) + 1, 0);
  for (int k = 0; k <= top; ++k) {
    // faces of size k live in homological degree k-1
    dims[k] = static_cast<int>(ws.index.faces(k).size()) - rank[k] - rank[k + 1];
  }
  return dims;
}

std::vector<int> reduced_homology_dims(const LabeledGraph& graph, Field field) {
  const auto adjacency = graph.local_adjacency();
  const bool cone = std::any_of(adjacency.begin(), adjacency.end(),
                                [](std::uint64_t a) { return a == 0; });
  if (cone) {
    const auto counts = independence_face_counts(adjacency);
    return std::vector<int>(counts.size(), 0);
  }
  return independence_homology(adjacency, field);
}

std::vector<int> reduced_homology_dims(const BipartiteGraph& graph, Field field) {
  return reduced_homology_dims(graph.to_labeled(), field);
}

int homology_at(const std::vector<int>& dims, int i) {
  const int k = i + 1;
  return k >= 0 && k < static_cast<int>(dims.size()) ? dims[k] : 0;
}

}  // namespace closedbetti
