#include <algorithm>
#include <array>
#include <string>

#include "rna/graph.hpp"

namespace rna {

Cut cut_of(const Graph& g, VertexMask side_a) {
  const VertexMask all = g.vertices();
  if ((side_a & ~all) != 0) throw validation_error("cut side contains non-vertices");
  if (side_a == 0 || side_a == all) {
    throw validation_error("cut side must be a nonempty proper subset of V");
  }
  Cut cut;
  cut.side_a = side_a;
  for (const Edge& e : g.edges()) {
    const bool in_u = (side_a & bit(e.u)) != 0;
    const bool in_v = (side_a & bit(e.v)) != 0;
    if (in_u != in_v) cut.crossing_edges.push_back(e);
  }
  return cut;
}

int edges_within(const Graph& g, VertexMask side_a) {
  int twice = 0;
  for (VertexMask rest = side_a; rest != 0; rest &= rest - 1) {
    twice += popcount(g.neighbors(std::countr_zero(rest)) & side_a);
  }
  return twice / 2;
}

VertexMask component_of(const Graph& g, int start, VertexMask within) {
  VertexMask seen = bit(start) & within;
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask rest = frontier; rest != 0; rest &= rest - 1) {
      next |= g.neighbors(std::countr_zero(rest));
    }
    frontier = next & within & ~seen;
    seen |= frontier;
  }
  return seen;
}

std::vector<VertexMask> components(const Graph& g) {
  std::vector<VertexMask> out;
  VertexMask left = g.vertices();
  while (left != 0) {
    const VertexMask c = component_of(g, std::countr_zero(left), left);
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

bool is_connected(const Graph& g) { return component_of(g, 0, g.vertices()) == g.vertices(); }

Graph induced_subgraph(const Graph& g, VertexMask keep) {
  keep &= g.vertices();
  const std::vector<int> kept = vertices_of(keep);
  if (kept.empty()) throw validation_error("induced subgraph of an empty vertex set");
  std::array<int, kMaxOrder> index{};
  for (std::size_t i = 0; i < kept.size(); ++i) index[static_cast<std::size_t>(kept[i])] = static_cast<int>(i);
  std::vector<VertexMask> adj(kept.size(), 0);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (VertexMask rest = g.neighbors(kept[i]) & keep; rest != 0; rest &= rest - 1) {
      adj[i] |= bit(index[static_cast<std::size_t>(std::countr_zero(rest))]);
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

namespace {

struct LowpointState {
  std::array<int, kMaxOrder> disc{};
  std::array<int, kMaxOrder> low{};
  int time = 0;
  std::vector<Edge> found;
};

void lowpoint_dfs(const Graph& g, int v, int parent, LowpointState& s) {
  s.disc[static_cast<std::size_t>(v)] = s.low[static_cast<std::size_t>(v)] = ++s.time;
  for (VertexMask rest = g.neighbors(v); rest != 0; rest &= rest - 1) {
    const int w = std::countr_zero(rest);
    const auto wi = static_cast<std::size_t>(w);
    const auto vi = static_cast<std::size_t>(v);
    if (s.disc[wi] == 0) {
      lowpoint_dfs(g, w, v, s);
      s.low[vi] = std::min(s.low[vi], s.low[wi]);
      if (s.low[wi] > s.disc[vi]) s.found.push_back({std::min(v, w), std::max(v, w)});
    } else if (w != parent) {
      // Simple graph: the only edge back to the parent is the tree edge.
      s.low[vi] = std::min(s.low[vi], s.disc[wi]);
    }
  }
}

}  // namespace

std::vector<Edge> bridges(const Graph& g) {
  if (!is_connected(g)) throw validation_error("bridges() needs a connected graph");
  LowpointState state;
  lowpoint_dfs(g, 0, -1, state);
  std::sort(state.found.begin(), state.found.end());
  return state.found;
}

namespace {

// Unit-capacity max-flow on the undirected graph, Edmonds-Karp style.
int unit_max_flow(const Graph& g, int source, int sink) {
  const int n = g.order();
  std::array<std::array<std::int8_t, kMaxOrder>, kMaxOrder> residual{};
  for (int u = 0; u < n; ++u) {
    for (VertexMask rest = g.neighbors(u); rest != 0; rest &= rest - 1) {
      residual[static_cast<std::size_t>(u)][static_cast<std::size_t>(std::countr_zero(rest))] = 1;
    }
  }
  int flow = 0;
  std::array<int, kMaxOrder> parent{};
  for (;;) {
    parent.fill(-1);
    parent[static_cast<std::size_t>(source)] = source;
    std::array<int, kMaxOrder> queue{};
    int head = 0;
    int tail = 0;
    queue[static_cast<std::size_t>(tail++)] = source;
    while (head < tail && parent[static_cast<std::size_t>(sink)] < 0) {
      const int u = queue[static_cast<std::size_t>(head++)];
      for (int w = 0; w < n; ++w) {
        if (parent[static_cast<std::size_t>(w)] < 0 &&
            residual[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] > 0) {
          parent[static_cast<std::size_t>(w)] = u;
          queue[static_cast<std::size_t>(tail++)] = w;
        }
      }
    }
    if (parent[static_cast<std::size_t>(sink)] < 0) return flow;
    for (int w = sink; w != source; w = parent[static_cast<std::size_t>(w)]) {
      const int u = parent[static_cast<std::size_t>(w)];
      --residual[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)];
      ++residual[static_cast<std::size_t>(w)][static_cast<std::size_t>(u)];
    }
    ++flow;
  }
}

}  // namespace

int edge_connectivity(const Graph& g) {
  if (g.order() < 2) throw validation_error("edge connectivity needs at least two vertices");
  if (!is_connected(g)) return 0;
  // Every minimum cut separates vertex 0 from some t.
  int best = g.min_degree();
  for (int t = 1; t < g.order() && best > 1; ++t) {
    best = std::min(best, unit_max_flow(g, 0, t));
  }
  return best;
}

}  // namespace rna
