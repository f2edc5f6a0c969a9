#include <numeric>
#include <string>

#include "rna/graph.hpp"

namespace rna {

PetersenParams PetersenParams::make(int n, int k) {
  if (n < 3 || k < 1 || 2 * k >= n) {
    throw validation_error("P(" + std::to_string(n) + "," + std::to_string(k) +
                           ") needs n >= 3, k >= 1 and 2k < n");
  }
  if (2 * n > kMaxOrder) {
    throw capacity_error("P(" + std::to_string(n) + "," + std::to_string(k) +
                         ") has more than 64 vertices");
  }
  PetersenParams p;
  p.n = n;
  p.k = k;
  return p;
}

int PetersenParams::inner_cycles() const noexcept { return std::gcd(n, k); }

Graph generalized_petersen(int n, int k) { return generalized_petersen(PetersenParams::make(n, k)); }

Graph generalized_petersen(const PetersenParams& p) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(3 * p.n));
  for (int i = 0; i < p.n; ++i) {
    edges.push_back({p.u(i), p.u(i + 1)});
    edges.push_back({p.u(i), p.v(i)});
    edges.push_back({p.v(i), p.v(i + p.k)});
  }
  return make_graph(p.order(), edges);
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "star") return Family::star;
  if (name == "wheel") return Family::wheel;
  if (name == "complete") return Family::complete;
  return std::nullopt;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::star: return "star";
    case Family::wheel: return "wheel";
    case Family::complete: return "complete";
  }
  return "?";
}

namespace {

void require(bool ok, Family f, int n, const char* range) {
  if (!ok) {
    throw validation_error(std::string(to_string(f)) + " needs " + range + ", got n=" +
                           std::to_string(n));
  }
}

}  // namespace

Graph family_graph(Family family, int n) {
  std::vector<Edge> edges;
  switch (family) {
    case Family::path:
      require(n >= 1, family, n, "n >= 1");
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      return make_graph(n, edges);
    case Family::cycle:
      require(n >= 3, family, n, "n >= 3");
      for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
      return make_graph(n, edges);
    case Family::star:
      require(n >= 1, family, n, "n >= 1 leaves");
      for (int i = 1; i <= n; ++i) edges.push_back({0, i});
      return make_graph(n + 1, edges);
    case Family::wheel: {
      require(n >= 4, family, n, "n >= 4");
      const int rim = n - 1;
      for (int i = 1; i <= rim; ++i) {
        edges.push_back({0, i});
        edges.push_back({i, i % rim + 1});
      }
      return make_graph(n, edges);
    }
    case Family::complete:
      require(n >= 1, family, n, "n >= 1");
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
      }
      return make_graph(n, edges);
  }
  throw validation_error("unknown family");
}

Graph cycle_power(int n, int p) {
  if (n < 3 || p < 1) {
    throw validation_error("cycle power needs n >= 3 and p >= 1");
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int d = std::min(j - i, n - (j - i));
      if (d <= p) edges.push_back({i, j});
    }
  }
  return make_graph(n, edges);
}

Graph join_with_bridge(const Graph& g1, int v1, const Graph& g2, int v2) {
  const int n1 = g1.order();
  const int n = n1 + g2.order();
  if (n > kMaxOrder) {
    throw capacity_error("joined graph would have " + std::to_string(n) + " vertices");
  }
  if (v1 < 0 || v1 >= n1 || v2 < 0 || v2 >= g2.order()) {
    throw validation_error("join vertex out of range");
  }
  std::vector<VertexMask> adj(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n1; ++v) adj[static_cast<std::size_t>(v)] = g1.neighbors(v);
  for (int v = 0; v < g2.order(); ++v) {
    adj[static_cast<std::size_t>(n1 + v)] = g2.neighbors(v) << n1;
  }
  adj[static_cast<std::size_t>(v1)] |= bit(n1 + v2);
  adj[static_cast<std::size_t>(n1 + v2)] |= bit(v1);
  return Graph::from_adjacency(std::move(adj));
}

}  // namespace rna
