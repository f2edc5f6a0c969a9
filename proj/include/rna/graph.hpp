#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rna/error.hpp"

namespace rna {

// A set of vertices of a graph with at most 64 vertices; bit v is vertex v.
using VertexMask = std::uint64_t;

inline constexpr int kMaxOrder = 64;

constexpr VertexMask bit(int v) noexcept { return VertexMask{1} << v; }

constexpr VertexMask full_mask(int order) noexcept {
  return order >= 64 ? ~VertexMask{0} : bit(order) - 1;
}

constexpr int popcount(VertexMask m) noexcept { return std::popcount(m); }

// Ascending list of the vertices in `m`.
std::vector<int> vertices_of(VertexMask m);

// For two sets of equal size: true if the ascending vertex list of `a`
// precedes that of `b` lexicographically.
constexpr bool lex_less(VertexMask a, VertexMask b) noexcept {
  const VertexMask diff = a ^ b;
  return diff != 0 && (a & diff & (~diff + 1)) != 0;
}

// Undirected edge. Canonical edges have u < v; edge lists are reported sorted.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on 1..64 vertices, stored as per-vertex neighbor
// bitmasks. Immutable after construction.
class Graph {
 public:
  // Validates symmetry, loop-freeness and that every bit is below the order.
  static Graph from_adjacency(std::vector<VertexMask> adj);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t size() const noexcept { return edge_count_; }
  VertexMask vertices() const noexcept { return full_mask(order()); }

  VertexMask neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return popcount(neighbors(v)); }
  bool has_edge(int u, int v) const { return (neighbors(u) & bit(v)) != 0; }
  std::span<const VertexMask> adjacency() const noexcept { return adj_; }

  // Canonical (u < v), lexicographically sorted.
  std::vector<Edge> edges() const;

  int min_degree() const;
  int max_degree() const;
  bool is_regular(int degree) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::vector<VertexMask> adj);

  std::vector<VertexMask> adj_;
  std::size_t edge_count_ = 0;
};

// Builds a simple graph; duplicate edges collapse. Throws capacity_error when
// order > 64, validation_error on a loop or an out-of-range endpoint.
Graph make_graph(int order, std::span<const Edge> edges);
Graph make_graph(int order, std::initializer_list<Edge> edges);

// ---------------------------------------------------------------------------
// Generalized Petersen graphs

// P(n,k): u_i is vertex i, v_i is vertex n+i (indices mod n).
struct PetersenParams {
  int n = 0;
  int k = 0;

  // Throws validation_error unless n >= 3, k >= 1 and 2k < n.
  static PetersenParams make(int n, int k);

  int u(int i) const noexcept { return wrap(i); }
  int v(int i) const noexcept { return n + wrap(i); }
  int order() const noexcept { return 2 * n; }
  // Number of inner cycles, gcd(n, k).
  int inner_cycles() const noexcept;
  VertexMask outer_vertices() const noexcept { return full_mask(n); }
  VertexMask inner_vertices() const noexcept { return full_mask(2 * n) & ~full_mask(n); }

 private:
  int wrap(int i) const noexcept { return ((i % n) + n) % n; }
};

Graph generalized_petersen(int n, int k);
Graph generalized_petersen(const PetersenParams& p);

// ---------------------------------------------------------------------------
// Standard families

enum class Family { path, cycle, star, wheel, complete };

std::optional<Family> parse_family(std::string_view name);
std::string_view to_string(Family f);

// path P_n (n >= 1), cycle C_n (n >= 3), star K_{1,n} with n leaves (n >= 1,
// hub is vertex 0), wheel W_n on n vertices: hub 0 plus rim cycle 1..n-1
// (n >= 4), complete K_n (n >= 1).
Graph family_graph(Family family, int n);

// C_n^p: i ~ j iff their distance on the cycle 0..n-1 is at most p.
Graph cycle_power(int n, int p);

// ---------------------------------------------------------------------------
// Cuts and structure

struct Cut {
  VertexMask side_a = 0;
  std::vector<Edge> crossing_edges;

  int size() const noexcept { return static_cast<int>(crossing_edges.size()); }
};

// Throws validation_error when side_a is empty, the whole vertex set, or
// contains non-vertices.
Cut cut_of(const Graph& g, VertexMask side_a);

// |[A : A^c]| without validation; the solver hot path.
inline int cut_size(const Graph& g, VertexMask side_a) noexcept {
  int size = 0;
  for (VertexMask rest = side_a; rest != 0; rest &= rest - 1) {
    size += popcount(g.adjacency()[static_cast<std::size_t>(std::countr_zero(rest))] & ~side_a);
  }
  return size;
}

// |E(G[A])|.
int edges_within(const Graph& g, VertexMask side_a);

// Vertices reachable from `start` using only vertices of `within`.
VertexMask component_of(const Graph& g, int start, VertexMask within);
std::vector<VertexMask> components(const Graph& g);
bool is_connected(const Graph& g);

Graph induced_subgraph(const Graph& g, VertexMask keep);

// Cut edges by lowpoint DFS. Throws validation_error on a disconnected graph.
std::vector<Edge> bridges(const Graph& g);

// Global edge connectivity by unit-capacity max-flow from vertex 0 to every
// other vertex. 0 for a disconnected graph; throws validation_error for
// order < 2.
int edge_connectivity(const Graph& g);

// Disjoint union of g1 and g2 (g2 shifted by g1.order()) plus the edge
// {v1, g1.order() + v2}.
Graph join_with_bridge(const Graph& g1, int v1, const Graph& g2, int v2);

}  // namespace rna
