#include <doctest.h>

#include <random>

#include "closedbetti/enumerate.hpp"
#include "closedbetti/error.hpp"
#include "closedbetti/theorems.hpp"
#include "support.hpp"

using namespace closedbetti;

namespace {

bool has_source(const PdPrediction& p, const char* tag) {
  return std::find(p.sources.begin(), p.sources.end(), tag) != p.sources.end();
}

int oracle_pd(const BipartiteGraph& g) { return betti_table(g).pd(); }

}  // namespace

TEST_CASE("predict_pd on the named vectors") {
  const auto cm = predict_pd(MuVector(6, {0, 0, 0, 0, 0}));
  CHECK(cm.kind == PdKind::exact);
  CHECK(cm.value == 5);
  CHECK(has_source(cm, formula::kCohenMacaulay));

  const auto eq = predict_pd(MuVector(6, {2, 2, 0, 0, 0}));
  CHECK(eq.kind == PdKind::exact);
  CHECK(eq.value == 6);
  CHECK(has_source(eq, formula::kEqualMu));

  const auto dec = predict_pd(MuVector(6, {3, 1, 0, 0, 0}));
  CHECK(dec.kind == PdKind::exact);
  CHECK(dec.value == 7);
  CHECK(has_source(dec, formula::kStrictlyDecreasing));
  CHECK(dec.lower.value() <= 7);
  CHECK(dec.upper.value() >= 7);

  const auto ones = predict_pd(MuVector(7, {1, 1, 1, 0, 0, 0}));
  CHECK(ones.kind == PdKind::exact);
  CHECK(has_source(ones, formula::kAllOnes));

  const auto single = predict_pd(MuVector(6, {2, 0, 0, 0, 0}));
  CHECK(single.kind == PdKind::exact);
  CHECK(single.value == 2 * 5 - 3);
  CHECK(has_source(single, formula::kSingleRow));

  CHECK_THROWS_AS(predict_pd(MuVector(4, {2, 0, 0})), Error);
}

TEST_CASE("predict_extremal on the named vectors") {
  const auto k3 = predict_extremal(MuVector::of_graph({0, 0, 0}));
  CHECK(k3.kind == PdKind::exact);
  CHECK(k3.extremal == std::pair{2, 3});
  CHECK(k3.reg == 1);

  CHECK(predict_extremal(MuVector(6, {2, 2, 0, 0, 0})).extremal == std::pair{6, 8});
  CHECK(predict_extremal(MuVector(6, {3, 1, 0, 0, 0})).extremal == std::pair{7, 10});
  CHECK(predict_extremal(MuVector(6, {3, 1, 0, 0, 0})).reg == 3);
  CHECK(predict_extremal(MuVector(6, {1, 1, 0, 0, 0})).extremal == std::pair{7, 9});
  // mu_1 = n - s - 1 blocks the strictly decreasing hypothesis.
  CHECK(predict_extremal(MuVector(7, {4, 2, 1, 0, 0, 0})).kind == PdKind::none);
}

TEST_CASE("compose_glued sums block corners") {
  const auto edge = predict_extremal(MuVector::of_graph({0, 0}));
  const std::vector<PdPrediction> path{edge, edge};
  const auto p = compose_glued(path);
  CHECK(p.kind == PdKind::exact);
  CHECK(p.value == 2);
  CHECK(p.reg == 2);
  CHECK(p.extremal == std::pair{2, 4});

  const auto tri = predict_extremal(MuVector::of_graph({0, 0, 0}));
  const std::vector<PdPrediction> triangles{tri, tri};
  const auto q = compose_glued(triangles);
  CHECK(q.value == 4);
  CHECK(q.reg == 2);

  const std::vector<PdPrediction> mixed{predict_extremal(MuVector::of_graph({3, 1, 0, 0, 0, 0})), edge};
  CHECK(compose_glued(mixed).extremal == std::pair{8, 12});

  const std::vector<PdPrediction> unknown{predict_extremal(MuVector(7, {4, 2, 1, 0, 0, 0})), edge};
  CHECK(compose_glued(unknown).kind == PdKind::none);

  // Against the oracle on the disjoint union.
  const auto glued = glue_blocks({MuVector::of_graph({3, 1, 0, 0, 0, 0}), MuVector::of_graph({0, 0})});
  const auto n = glued.graph.label_bound();
  const std::vector<int> xs{n};
  const std::vector<int> ys{1};
  const auto t = betti_table(initial_graph(glued.graph).without(xs, ys));
  CHECK(t.pd() == 8);
  CHECK(t.reg() == 4);
  CHECK(t.at(8, 12) != 0);
}

TEST_CASE("verify_graph") {
  const auto fig = verify_graph(from_mu(MuVector::of_graph({3, 1, 0, 0, 0, 0})));
  CHECK(fig.passed());
  REQUIRE(fig.extremal.has_value());
  REQUIRE(fig.extremal->extremals.size() == 1);
  CHECK(fig.extremal->extremals[0].i == 7);
  CHECK(fig.extremal->extremals[0].j == 10);
  CHECK_FALSE(fig.transferred.empty());

  const auto k4 = verify_graph(complete_graph(4));
  CHECK(k4.passed());
  CHECK(k4.extremal->pd == 3);
  CHECK(k4.extremal->reg == 1);
  REQUIRE(k4.extremal->extremals.size() == 1);
  CHECK(k4.extremal->extremals[0].i == 3);
  CHECK(k4.extremal->extremals[0].j == 4);

  const auto path = verify_graph(path_graph(4));
  CHECK(path.passed());
  CHECK(path.blocks.size() == 3);
  CHECK(path.extremal->pd == 3);
  CHECK(path.extremal->reg == 3);

  const auto skipped = verify_graph(from_mu(MuVector::of_graph({3, 1, 0, 0, 0, 0})), {Field(), 4, 1});
  CHECK(skipped.oracle_skipped);
  CHECK(skipped.passed());

  CHECK_THROWS_AS(verify_graph(make_graph(4, {{1, 2}, {1, 3}, {1, 4}})), Error);
}

TEST_CASE("predictions agree with the oracle for every block up to 7 vertices") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& mu : enumerate_mu_vectors(n).vectors) {
      const auto h = initial_closed_graph(mu);
      const auto t = betti_table(h.bipartite);
      const auto pred = predict_pd(mu);
      if (pred.kind == PdKind::exact) CHECK(t.pd() == pred.value);
      if (pred.upper) CHECK(t.pd() <= *pred.upper);
      REQUIRE(pred.lower.has_value());
      CHECK(t.pd() >= *pred.lower);
      const auto ext = predict_extremal(mu);
      if (ext.kind == PdKind::exact) {
        const auto r = extremal_bettis(t);
        CHECK(r.unique);
        CHECK(std::pair{r.extremals[0].i, r.extremals[0].j} == *ext.extremal);
        CHECK(r.reg == *ext.reg);
      }
      // Cohen-Macaulay iff mu = 0 iff reg 1.
      CHECK((t.pd() == n - 1) == mu.is_zero());
      CHECK((t.reg() == 1) == mu.is_zero());
    }
  }
}

TEST_CASE("s = 1 gives pd 2(n-1) - (mu_1 + 1); all-ones gives 2(n-1) - (s + 1)") {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& mu : enumerate_mu_vectors(n).vectors) {
      if (mu.s() == 1) {
        CHECK(oracle_pd(initial_closed_graph(mu).bipartite) == 2 * (n - 1) - (mu[1] + 1));
      }
      bool all_ones = mu.s() >= 1;
      for (int j = 1; j <= mu.s(); ++j) all_ones = all_ones && mu[j] == 1;
      if (all_ones && n <= 7) {
        CHECK(oracle_pd(initial_closed_graph(mu).bipartite) == 2 * (n - 1) - (mu.s() + 1));
      }
    }
  }
}

TEST_CASE("deleting the closed neighbourhood of x_s splits off a smaller initial-closed graph") {
  for (int n = 4; n <= 7; ++n) {
    for (const auto& mu : enumerate_mu_vectors(n).vectors) {
      const int s = mu.s();
      if (s < 2) continue;
      const auto h = initial_closed_graph(mu).bipartite;
      const auto nbrs = h.x_neighbors(s);
      const std::vector<int> xs{s};
      const int link_pd = oracle_pd(h.without(xs, nbrs));

      std::vector<int> small(s - 1);
      for (int j = 1; j <= s - 1; ++j) small[j - 1] = std::max(0, mu[j] - (n - s));
      const auto h_small = initial_closed_graph(MuVector(s, small)).bipartite;
      std::vector<int> tail;
      for (int k = s; k <= n - 1; ++k) tail.push_back(k);
      CHECK(h.without(tail, tail) == h_small);
      CHECK(link_pd == n - 1 - s + oracle_pd(h_small));
      CHECK(link_pd >= n - 2);
      CHECK((link_pd == n - 2) == (mu[1] <= n - s));
    }
  }
}

TEST_CASE("pd after deleting x_s follows the two-case split") {
  for (int n = 4; n <= 7; ++n) {
    for (const auto& mu : enumerate_mu_vectors(n).vectors) {
      const int s = mu.s();
      if (s < 2 || mu[1] >= n - s) continue;
      const auto h = initial_closed_graph(mu).bipartite;
      const std::vector<int> xs{s};
      const std::vector<int> none;
      const int deleted = oracle_pd(h.without(xs, none));
      bool boundary = true;
      for (int j = 1; j <= s - 1; ++j) boundary = boundary && mu[j] == n - s - 1;
      if (boundary) {
        CHECK(deleted == n - 1);
      } else {
        const std::vector<int> ys{s};
        CHECK(deleted == 1 + oracle_pd(h.without(xs, ys)));
      }
    }
  }
}

TEST_CASE("depth lemma inequalities on random graphs") {
  std::mt19937 rng(101);
  for (int round = 0; round < 25; ++round) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const auto g = testing::random_graph(rng, n, 0.35);
    for (int v = 1; v <= n; ++v) {
      const auto c = check_depth_lemma(g, v);
      CHECK(c.all());
      CHECK(c.degree == g.degree(v));
    }
  }
}

TEST_CASE("conjecture scan") {
  const auto five = conjecture_scan(5);
  CHECK(five.counterexamples.empty());
  std::size_t expected = 0;
  for (int n = 2; n <= 5; ++n) expected += enumerate_mu_vectors(n).vectors.size();
  CHECK(five.entries.size() == expected);
  CHECK(conjecture_scan(6).counterexamples.empty());
}
