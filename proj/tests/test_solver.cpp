#include <doctest.h>

#include <numeric>

#include "rna/revolving_door.hpp"
#include "rna/solver.hpp"
#include "support.hpp"

using namespace rna;

namespace {

void check_result_invariants(const Graph& g, const RnaResult& r) {
  CHECK(popcount(r.witness_side) == g.order() / 2);
  CHECK(cut_of(g, r.witness_side).size() == r.value);
  CHECK(negative_count(signs_from_labeling(g, r.witness_labeling)) == r.value);
  CHECK(r.witness_labeling.even_class() == r.witness_side);
}

const SolverKind kAll[] = {SolverKind::naive, SolverKind::fast, SolverKind::branch_bound};

}  // namespace

TEST_CASE("naive solver examples") {
  CHECK(rna_naive(family_graph(Family::path, 5)).value == 1);
  CHECK(rna_naive(family_graph(Family::complete, 5)).value == 6);
  CHECK(rna_naive(family_graph(Family::wheel, 6)).value == 5);
}

TEST_CASE("fast solver examples") {
  CHECK(rna_fast(generalized_petersen(5, 2)).value == 5);
  CHECK(rna_fast(generalized_petersen(12, 5)).value == 8);
}

TEST_CASE("branch and bound examples") {
  CHECK(rna_branch_bound(generalized_petersen(10, 2)).value == 6);
  CHECK(rna_branch_bound(family_graph(Family::complete, 6)).value == 9);
}

TEST_CASE("solvers reject bad input") {
  for (SolverKind kind : kAll) {
    CAPTURE(to_string(kind));
    CHECK_THROWS_AS(solve(kind, family_graph(Family::path, 1)), validation_error);
    CHECK_THROWS_AS(solve(kind, make_graph(4, {{0, 1}, {2, 3}})), validation_error);
  }
  CHECK_THROWS_AS(rna_naive(family_graph(Family::cycle, 29)), capacity_error);
  CHECK_THROWS_AS(rna_fast(family_graph(Family::cycle, 41)), capacity_error);
  CHECK_THROWS_AS(rna_branch_bound(family_graph(Family::cycle, 41)), capacity_error);

  SolverOptions tight;
  tight.max_order = 6;
  CHECK_THROWS_AS(rna_fast(family_graph(Family::cycle, 7), tight), capacity_error);
  SolverOptions loose;
  loose.max_order = 30;
  CHECK(rna_naive(family_graph(Family::path, 29), loose).value == 1);
}

TEST_CASE("property: solvers equal the labeling definition on small graphs") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 7;
    const Graph g = random_graph(n, 0.3 + 0.1 * (trial % 4), rng);
    const int expected = oracle::rna_by_labelings(n, edge_list(g));
    for (SolverKind kind : kAll) {
      const RnaResult r = solve(kind, g);
      CHECK(r.value == expected);
      check_result_invariants(g, r);
    }
  }
}

TEST_CASE("property: solvers equal the balanced-cut oracle up to order 14") {
  std::mt19937 rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 6 + trial % 9;
    const Graph g = random_graph(n, 0.2 + 0.1 * (trial % 4), rng);
    const int expected = oracle::min_balanced_cut(n, edge_list(g)).first;
    const RnaResult naive = rna_naive(g);
    CHECK(naive.value == expected);
    for (SolverKind kind : kAll) {
      const RnaResult r = solve(kind, g);
      CHECK(r.value == expected);
      check_result_invariants(g, r);
    }
    // The naive witness is the lexicographically least minimizer.
    VertexMask lex_least = 0;
    for (VertexMask a = 0; a <= g.vertices(); ++a) {
      if (popcount(a) != n / 2 || cut_size(g, a) != expected) continue;
      if (lex_least == 0 || lex_less(a, lex_least)) lex_least = a;
    }
    CHECK(naive.witness_side == lex_least);
  }
}

TEST_CASE("property: trees with a centroid bridge") {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const int half = 1 + trial % 6;
    // Two random trees of near-equal order joined by one edge.
    auto tree = [&](int order) {
      std::vector<Edge> es;
      for (int v = 1; v < order; ++v) {
        es.push_back({std::uniform_int_distribution<int>(0, v - 1)(rng), v});
      }
      return make_graph(order, es);
    };
    const Graph g = join_with_bridge(tree(half), 0, tree(half + trial % 2), 0);
    CHECK(rna_branch_bound(g).value == rna_naive(g).value);
    CHECK(rna_naive(g).value == 1);
    CHECK(rna_one_check(g).has_value());
  }
}

TEST_CASE("property: rna is at least the edge connectivity") {
  std::mt19937 rng(34);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 11;
    const Graph g = random_graph(n, 0.3 + 0.1 * (trial % 5), rng);
    CHECK(rna_fast(g).value >= edge_connectivity(g));
  }
}

TEST_CASE("property: P(n,k) lies between 3 and n") {
  for (int n = 3; n <= 10; ++n) {
    for (int k = 1; 2 * k < n; ++k) {
      const int v = rna_fast(generalized_petersen(n, k)).value;
      CHECK(v >= 3);
      CHECK(v <= n);
    }
  }
}

TEST_CASE("property: rna_one_check iff rna is 1") {
  std::mt19937 rng(35);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 11;
    const Graph g = random_graph(n, 0.1 + 0.05 * (trial % 6), rng);
    const auto bridge = rna_one_check(g);
    CHECK(bridge.has_value() == (rna_naive(g).value == 1));
    if (bridge) {
      const auto all = bridges(g);
      CHECK(std::find(all.begin(), all.end(), *bridge) != all.end());
    }
  }
}

TEST_CASE("rna_one_check examples") {
  CHECK(rna_one_check(family_graph(Family::path, 4)) == Edge{1, 2});
  const Graph k3_pendant = make_graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  CHECK_FALSE(rna_one_check(k3_pendant).has_value());
  CHECK(rna_naive(k3_pendant).value == 2);
}

TEST_CASE("property: adding an edge raises rna by at most one") {
  std::mt19937 rng(36);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 8;
    const Graph g = random_graph(n, 0.3, rng);
    const int base = rna_fast(g).value;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (g.has_edge(a, b)) continue;
        std::vector<Edge> es = g.edges();
        es.push_back({a, b});
        const int plus = rna_fast(make_graph(n, es)).value;
        CHECK(plus >= base);
        CHECK(plus <= base + 1);
      }
    }
  }
}

TEST_CASE("property: even-order balanced cuts have the parity of the side degree sum") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 4 + 2 * (trial % 4);
    const Graph g = random_graph(n, 0.4, rng);
    for (VertexMask a = 0; a <= g.vertices(); ++a) {
      if (popcount(a) != n / 2) continue;
      int deg = 0;
      for (int v : vertices_of(a)) deg += g.degree(v);
      CHECK(cut_size(g, a) % 2 == deg % 2);
    }
  }
}

TEST_CASE("fast solver is deterministic across thread counts") {
  SolverOptions serial;
  serial.early_exit = false;
  SolverOptions parallel = serial;
  parallel.threads = 4;
  for (auto [n, k] : {std::pair{12, 5}, {11, 2}, {10, 3}, {9, 4}}) {
    const Graph g = generalized_petersen(n, k);
    const RnaResult a = rna_fast(g, serial);
    const RnaResult b = rna_fast(g, parallel);
    CHECK(a.value == b.value);
    CHECK(a.witness_side == b.witness_side);
    CHECK(a.stats.subsets_examined == b.stats.subsets_examined);
    // Without early exit the fast witness is the lexicographically least.
    CHECK(a.witness_side == rna_naive(g).witness_side);
  }
}

TEST_CASE("subsets examined without early exit") {
  SolverOptions full;
  full.early_exit = false;
  for (int n = 2; n <= 20; ++n) {
    const Graph g = family_graph(Family::path, n);
    const std::uint64_t expected_fast =
        n % 2 == 0 ? oracle::choose(n - 1, n / 2 - 1) : oracle::choose(n, n / 2);
    CHECK(rna_fast(g, full).stats.subsets_examined == expected_fast);
    CHECK(rna_naive(g, full).stats.subsets_examined == oracle::choose(n, n / 2));
  }
}

TEST_CASE("early exit stops at the connectivity bound") {
  const RnaResult r = rna_fast(family_graph(Family::path, 20));
  CHECK(r.value == 1);
  CHECK(r.stats.stopped_early);
  CHECK(r.stats.subsets_examined < binomial(19, 9));
}

TEST_CASE("cut spectrum kernel matches the serial reference") {
  std::mt19937 rng(38);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 4 + trial;
    const Graph g = random_graph(n, 0.4, rng);
    const auto reference = balanced_cut_spectrum_reference(g);
    CHECK(balanced_cut_spectrum(g, 1) == reference);
    CHECK(balanced_cut_spectrum(g, 3) == reference);
  }
  // Total count equals the number of enumerated subsets.
  const auto s = balanced_cut_spectrum(generalized_petersen(6, 2));
  CHECK(std::accumulate(s.begin(), s.end(), std::uint64_t{0}) == oracle::choose(11, 5));
}

TEST_CASE("verify_no_cut examples") {
  CHECK(verify_no_cut(generalized_petersen(6, 2), 3, CutParity::exact));
  CHECK(verify_no_cut(generalized_petersen(8, 3), 0, CutParity::odd));
  CHECK(verify_no_cut(generalized_petersen(7, 2), 0, CutParity::even));
  // The prism has balanced 3-cuts.
  CHECK_FALSE(verify_no_cut(generalized_petersen(3, 1), 3, CutParity::exact));
  CHECK_FALSE(verify_no_cut(family_graph(Family::cycle, 6), 2, CutParity::exact));
  CHECK_THROWS_AS(verify_no_cut(generalized_petersen(13, 2), 3, CutParity::exact), capacity_error);
  CHECK(verify_no_cut(generalized_petersen(13, 2), 3, CutParity::exact, 1, 26));
}

TEST_CASE("solver names") {
  CHECK(parse_solver("bb") == SolverKind::branch_bound);
  CHECK(to_string(SolverKind::naive) == "naive");
  CHECK_FALSE(parse_solver("greedy").has_value());
}
