#include <doctest.h>

#include <functional>

#include "closedbetti/closed_graph.hpp"
#include "closedbetti/enumerate.hpp"
#include "closedbetti/error.hpp"
#include "support.hpp"

using namespace closedbetti;

namespace {

/// Decreasing sequences a_1 >= ... >= a_k >= 0 with a_i <= k + 1 - i,
/// counted by recursion on the first entry.
long long count_staircase(int k) {
  std::function<long long(int, int)> count = [&](int i, int cap) -> long long {
    if (i > k) return 1;
    long long total = 0;
    for (int v = 0; v <= std::min(cap, k + 1 - i); ++v) total += count(i + 1, v);
    return total;
  };
  return count(1, k);
}

std::vector<std::vector<int>> values_of(const MuFamily& family) {
  std::vector<std::vector<int>> out;
  for (const auto& mu : family.vectors) out.push_back(mu.values());
  return out;
}

}  // namespace

TEST_CASE("enumerate_mu_vectors") {
  CHECK(values_of(enumerate_mu_vectors(2)) == std::vector<std::vector<int>>{{0, 0}});
  CHECK(values_of(enumerate_mu_vectors(3)) == std::vector<std::vector<int>>{{0, 0, 0}});
  CHECK(values_of(enumerate_mu_vectors(4)) ==
        std::vector<std::vector<int>>{{0, 0, 0, 0}, {1, 0, 0, 0}});
  CHECK(values_of(enumerate_mu_vectors(5)) ==
        std::vector<std::vector<int>>{{0, 0, 0, 0, 0},
                                      {1, 0, 0, 0, 0},
                                      {1, 1, 0, 0, 0},
                                      {2, 0, 0, 0, 0},
                                      {2, 1, 0, 0, 0}});
  CHECK_THROWS_AS(enumerate_mu_vectors(1), Error);
}

TEST_CASE("family sizes match an independent count") {
  for (int n = 3; n <= 11; ++n) {
    CHECK(static_cast<long long>(enumerate_mu_vectors(n).vectors.size()) == count_staircase(n - 3));
  }
}

TEST_CASE("every enumerated vector is a block and the list is sorted") {
  for (int n = 2; n <= 9; ++n) {
    const auto family = enumerate_mu_vectors(n);
    for (std::size_t k = 0; k < family.vectors.size(); ++k) {
      const auto& mu = family.vectors[k];
      CHECK(mu.n() == n);
      CHECK(mu.is_full());
      CHECK(mu.satisfies(MuVector::Flavor::no_cut_point));
      if (k > 0) CHECK(family.vectors[k - 1].values() < mu.values());
    }
    CHECK(family.vectors.size() == testing::block_mu_values(n).size());
  }
}

TEST_CASE("enumerate_glued") {
  const auto two = enumerate_glued(2, 3);
  REQUIRE(two.size() == 1);
  CHECK(two[0].graph == make_graph(2, {{1, 2}}));

  const auto three = enumerate_glued(3, 2);
  REQUIRE(three.size() == 2);
  CHECK(three[0].graph == complete_graph(3));
  CHECK(three[1].graph == path_graph(3));

  bool has_path = false;
  for (const auto& g : enumerate_glued(4, 3)) has_path = has_path || g.graph == path_graph(4);
  CHECK(has_path);

  CHECK(enumerate_glued(4, 1).size() == enumerate_mu_vectors(4).vectors.size());
}

TEST_CASE("glued graphs are closed and decompose back into their blocks") {
  for (int n = 2; n <= 8; ++n) {
    std::size_t blocks_total = 0;
    for (const auto& g : enumerate_glued(n, n)) {
      CHECK(check_closed(g.graph));
      CHECK(is_connected(g.graph));
      const auto chain = chain_decompose(g.graph);
      REQUIRE(chain.blocks.size() == g.blocks.size());
      for (std::size_t k = 0; k < chain.blocks.size(); ++k) CHECK(chain.blocks[k].mu == g.blocks[k]);
      blocks_total += g.blocks.size();
    }
    CHECK(blocks_total > 0);
    // Every connected closed graph on n vertices appears exactly once.
    if (n <= 7) CHECK(enumerate_glued(n, n).size() == testing::connected_mu_values(n).size());
  }
}
