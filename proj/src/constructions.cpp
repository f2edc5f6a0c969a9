#include "rna/constructions.hpp"

#include <string>

#include "rna/closed_forms.hpp"

namespace rna {

std::optional<FamousGraph> parse_famous(std::string_view name) {
  if (name == "petersen") return FamousGraph::petersen;
  if (name == "durer") return FamousGraph::durer;
  if (name == "mobius-kantor" || name == "mobius_kantor") return FamousGraph::mobius_kantor;
  if (name == "dodecahedron") return FamousGraph::dodecahedron;
  if (name == "desargues") return FamousGraph::desargues;
  if (name == "nauru") return FamousGraph::nauru;
  return std::nullopt;
}

std::string_view to_string(FamousGraph g) {
  switch (g) {
    case FamousGraph::petersen: return "petersen";
    case FamousGraph::durer: return "durer";
    case FamousGraph::mobius_kantor: return "mobius-kantor";
    case FamousGraph::dodecahedron: return "dodecahedron";
    case FamousGraph::desargues: return "desargues";
    case FamousGraph::nauru: return "nauru";
  }
  return "?";
}

namespace {

// Labels listed as f(u_0..u_{n-1}) followed by f(v_0..v_{n-1}).
ParityLabeling uv_labels(std::vector<int> u, const std::vector<int>& v) {
  u.insert(u.end(), v.begin(), v.end());
  return ParityLabeling(std::move(u));
}

ParityLabeling nauru_labeling() {
  constexpr int n = 12;
  std::vector<int> labels(2 * n);
  for (int i = 0; i < n; ++i) {
    const bool low = i <= 2 || (i >= 6 && i <= 8);
    labels[static_cast<std::size_t>(i)] = low ? 2 * i + 1 : 2 * i - 4;
    labels[static_cast<std::size_t>(n + i)] = low ? 2 * i + 7 : 2 * i + 2;
  }
  return ParityLabeling(std::move(labels));
}

}  // namespace

FamousGraphRecord famous(FamousGraph name) {
  switch (name) {
    case FamousGraph::petersen:
      return {name, PetersenParams::make(5, 2), proof_labeling(ProofLabeling::petersen_upper, 5),
              5};
    case FamousGraph::durer:
      return {name, PetersenParams::make(6, 2),
              uv_labels({1, 3, 5, 2, 4, 6}, {7, 8, 9, 10, 11, 12}), 4};
    case FamousGraph::mobius_kantor:
      return {name, PetersenParams::make(8, 3),
              uv_labels({1, 3, 5, 7, 2, 4, 6, 8}, {9, 15, 10, 11, 12, 14, 13, 16}), 6};
    case FamousGraph::dodecahedron:
      return {name, PetersenParams::make(10, 2),
              proof_labeling(ProofLabeling::petersen_k2_even, 10), 6};
    case FamousGraph::desargues:
      return {name, PetersenParams::make(10, 3),
              uv_labels({1, 3, 5, 7, 9, 2, 4, 6, 8, 10},
                        {11, 13, 12, 15, 17, 14, 16, 19, 18, 20}),
              6};
    case FamousGraph::nauru:
      return {name, PetersenParams::make(12, 5), nauru_labeling(), 8};
  }
  throw validation_error("unknown famous graph");
}

FamousGraphRecord famous(std::string_view name) {
  const auto parsed = parse_famous(name);
  if (!parsed) {
    throw validation_error("unknown famous graph '" + std::string(name) +
                           "' (expected petersen, durer, mobius-kantor, dodecahedron, "
                           "desargues or nauru)");
  }
  return famous(*parsed);
}

namespace {

void require_param(bool ok, std::string_view what, int n, int max_n) {
  if (n < 1) throw validation_error(std::string(what) + " needs n >= 1");
  if (!ok) {
    throw capacity_error(std::string(what) + "(" + std::to_string(n) +
                         ") exceeds 64 vertices; n <= " + std::to_string(max_n));
  }
}

// C_m^p plus the chords v_i v_{i+offset}, 1 <= i <= last.
Graph power_with_chords(int m, int p, int offset, int last) {
  std::vector<Edge> edges = cycle_power(m, p).edges();
  for (int i = 1; i <= last; ++i) edges.push_back({i, i + offset});
  return make_graph(m, edges);
}

}  // namespace

Graph construct_gr(int n) {
  require_param(n <= 10, "G_r", n, 10);
  return power_with_chords(6 * n - 1, 2 * n - 1, 3 * n - 1, 3 * n - 1);
}

Graph construct_regular_4nm1(int n) {
  require_param(n <= 5, "regular_4nm1", n, 5);
  const Graph half = construct_gr(n);
  return join_with_bridge(half, 0, half, 0);
}

Graph construct_gs(int n) {
  require_param(n <= 15, "G_s", n, 15);
  return power_with_chords(4 * n + 3, 2 * n, 2 * n + 1, 2 * n + 1);
}

Graph construct_regular_4np1(int n) {
  require_param(n <= 7, "regular_4np1", n, 7);
  const Graph half = construct_gs(n);
  return join_with_bridge(half, 0, half, 0);
}

std::pair<Graph, ParityLabeling> fig9_cubic_order10() {
  // Left block 0..4 carries odd labels, right block 5..9 even ones; 4-5 is
  // the bridge.
  Graph g = make_graph(10, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 3}, {3, 4}, {4, 5},
                            {5, 6}, {5, 8}, {6, 7}, {6, 9}, {7, 8}, {7, 9}, {8, 9}});
  ParityLabeling f({1, 3, 5, 7, 9, 10, 4, 2, 8, 6});
  return {std::move(g), std::move(f)};
}

}  // namespace rna
