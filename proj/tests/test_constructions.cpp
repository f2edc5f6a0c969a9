#include <doctest.h>

#include <set>

#include "rna/constructions.hpp"
#include "rna/solver.hpp"
#include "support.hpp"

using namespace rna;

TEST_CASE("famous records: labeling count and solver both give the claimed value") {
  const std::pair<std::string_view, int> claimed[] = {
      {"petersen", 5},     {"durer", 4},     {"mobius-kantor", 6},
      {"dodecahedron", 6}, {"desargues", 6}, {"nauru", 8}};
  for (auto [name, value] : claimed) {
    CAPTURE(name);
    const FamousGraphRecord rec = famous(name);
    CHECK(rec.claimed_rna == value);
    const Graph g = rec.graph();
    CHECK(g.is_regular(3));
    CHECK(negative_count(signs_from_labeling(g, rec.labeling)) == value);
    CHECK(rna_fast(g).value == value);
  }
  CHECK(famous("petersen").params.n == 5);
  CHECK(famous("durer").params.k == 2);
  CHECK(famous("desargues").params.n == 10);
  CHECK(famous("desargues").params.k == 3);
  CHECK(famous("mobius_kantor").name == FamousGraph::mobius_kantor);
  CHECK_THROWS_AS(famous("heawood"), validation_error);
}

TEST_CASE("famous labelings spot values") {
  const auto mk = famous(FamousGraph::mobius_kantor);
  CHECK(mk.labeling[mk.params.v(0)] == 9);
  CHECK(mk.labeling[mk.params.v(1)] == 15);
  const auto des = famous(FamousGraph::desargues);
  CHECK(des.labeling[des.params.v(0)] == 11);
  CHECK(des.labeling[des.params.v(1)] == 13);
  const auto durer = famous(FamousGraph::durer);
  for (int i = 0; i < 6; ++i) CHECK(durer.labeling[durer.params.v(i)] == i + 7);
}

TEST_CASE("G_r examples") {
  const Graph g1 = construct_gr(1);
  CHECK(g1.order() == 5);
  CHECK(g1.degree(0) == 2);
  for (int v = 1; v < 5; ++v) CHECK(g1.degree(v) == 3);
  // C_5 plus the chords v1v3 and v2v4.
  CHECK(g1.edges() == std::vector<Edge>{{0, 1}, {0, 4}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});

  const Graph g2 = construct_gr(2);
  CHECK(g2.order() == 11);
  CHECK(g2.degree(0) == 6);
  for (int v = 1; v < 11; ++v) CHECK(g2.degree(v) == 7);

  CHECK_THROWS_AS(construct_gr(11), capacity_error);
  CHECK_THROWS_AS(construct_gr(0), validation_error);
}

TEST_CASE("G_s examples") {
  const Graph g1 = construct_gs(1);
  CHECK(g1.order() == 7);
  CHECK(g1.degree(0) == 4);
  for (int v = 1; v < 7; ++v) CHECK(g1.degree(v) == 5);
  CHECK_THROWS_AS(construct_gs(16), capacity_error);
}

TEST_CASE("regular joins have a balanced bridge") {
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    const Graph a = construct_regular_4nm1(n);
    CHECK(a.order() == 12 * n - 2);
    CHECK(a.is_regular(4 * n - 1));
    CHECK(is_connected(a));
    const auto ba = rna_one_check(a);
    REQUIRE(ba.has_value());
    CHECK(bridges(a).size() == 1);

    const Graph b = construct_regular_4np1(n);
    CHECK(b.order() == 8 * n + 6);
    CHECK(b.is_regular(4 * n + 1));
    CHECK(is_connected(b));
    CHECK(rna_one_check(b).has_value());
  }
  CHECK(rna_fast(construct_regular_4nm1(1)).value == 1);
  CHECK(rna_fast(construct_regular_4np1(1)).value == 1);
  CHECK(construct_regular_4np1(2).is_regular(9));
  CHECK(construct_regular_4np1(2).order() == 22);
  CHECK_THROWS_AS(construct_regular_4nm1(6), capacity_error);
  CHECK_THROWS_AS(construct_regular_4np1(8), capacity_error);
}

TEST_CASE("order-10 cubic graph with one negative edge") {
  const auto [g, f] = fig9_cubic_order10();
  CHECK(g.order() == 10);
  CHECK(g.is_regular(3));
  CHECK(negative_count(g, f) == 1);
  const auto bs = bridges(g);
  REQUIRE(bs.size() == 1);
  CHECK(popcount(component_of(g, bs[0].u, g.vertices() & ~bit(bs[0].v))) == 5);
  CHECK(rna_naive(g).value == 1);
  CHECK(oracle::rna_by_labelings(10, edge_list(g)) == 1);
}

TEST_CASE("cubic census counts") {
  CHECK(enumerate_cubic(4).size() == 1);
  CHECK(enumerate_cubic(6).size() == 2);
  CHECK(enumerate_cubic(8).size() == 5);
  CHECK(enumerate_cubic(10).size() == 19);
  CHECK(enumerate_cubic(4).front() == family_graph(Family::complete, 4));
  CHECK_THROWS_AS(enumerate_cubic(7), validation_error);
  CHECK_THROWS_AS(enumerate_cubic(12), validation_error);
}

TEST_CASE("cubic census members are connected, cubic and pairwise non-isomorphic") {
  for (int order = 4; order <= 10; order += 2) {
    const auto graphs = enumerate_cubic(order);
    std::set<std::uint64_t> codes;
    for (const Graph& g : graphs) {
      CHECK(is_connected(g));
      CHECK(g.is_regular(3));
      codes.insert(canonical_code(g));
    }
    CHECK(codes.size() == graphs.size());
    if (order <= 8) {
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        for (std::size_t j = i + 1; j < graphs.size(); ++j) {
          CHECK_FALSE(oracle::isomorphic(order, edge_list(graphs[i]), edge_list(graphs[j])));
        }
      }
    }
  }
}

TEST_CASE("balanced bridges in the cubic census") {
  for (int order = 4; order <= 8; order += 2) {
    for (const Graph& g : enumerate_cubic(order)) CHECK_FALSE(rna_one_check(g).has_value());
  }
  int with_one = 0;
  for (const Graph& g : enumerate_cubic(10)) {
    const bool one = rna_one_check(g).has_value();
    CHECK(one == (rna_naive(g).value == 1));
    with_one += one ? 1 : 0;
  }
  CHECK(with_one >= 1);
}

TEST_CASE("property: canonical code is invariant under relabeling") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 8;
    const auto edges = oracle::random_connected(n, 0.4, rng);
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    oracle::EdgeList moved;
    for (auto [a, b] : edges) moved.emplace_back(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]);
    CHECK(canonical_code(graph_of(n, edges)) == canonical_code(graph_of(n, moved)));
  }
  // Different graphs, different codes.
  CHECK(canonical_code(family_graph(Family::path, 4)) != canonical_code(family_graph(Family::star, 3)));
}

TEST_CASE("bridge sides for 5-regular graphs") {
  for (int m = 1; m <= 6; ++m) {
    std::vector<int> seq(static_cast<std::size_t>(m), 5);
    seq[0] = 4;
    CHECK(bridge_side_exists(m, 5) == oracle::degree_sequence_realizable(seq));
    CHECK_FALSE(bridge_side_exists(m, 5));
  }
  CHECK(bridge_side_exists(7, 5));
  // Cubic: the 5-vertex block of the order-10 example.
  CHECK(bridge_side_exists(5, 3));
  CHECK_FALSE(bridge_side_exists(3, 3));
  for (int m = 1; m <= 6; ++m) {
    std::vector<int> seq(static_cast<std::size_t>(m), 3);
    seq[0] = 2;
    CHECK(bridge_side_exists(m, 3) == oracle::degree_sequence_realizable(seq));
  }
}
