#include "rna/graph.hpp"

#include <algorithm>
#include <string>

namespace rna {

std::vector<int> vertices_of(VertexMask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

Graph::Graph(std::vector<VertexMask> adj) : adj_(std::move(adj)) {
  std::size_t degree_sum = 0;
  for (VertexMask row : adj_) degree_sum += static_cast<std::size_t>(popcount(row));
  edge_count_ = degree_sum / 2;
}

Graph Graph::from_adjacency(std::vector<VertexMask> adj) {
  const int n = static_cast<int>(adj.size());
  if (n > kMaxOrder) {
    throw capacity_error("graph order " + std::to_string(n) + " exceeds 64");
  }
  if (n < 1) throw validation_error("graph must have at least one vertex");
  const VertexMask all = full_mask(n);
  for (int v = 0; v < n; ++v) {
    const VertexMask row = adj[static_cast<std::size_t>(v)];
    if ((row & ~all) != 0) throw validation_error("neighbor index out of range");
    if ((row & bit(v)) != 0) throw validation_error("loop at vertex " + std::to_string(v));
    for (VertexMask rest = row; rest != 0; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      if ((adj[static_cast<std::size_t>(w)] & bit(v)) == 0) {
        throw validation_error("adjacency is not symmetric");
      }
    }
  }
  return Graph(std::move(adj));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u) {
    // Neighbors above u, ascending: already in lexicographic order.
    for (VertexMask rest = adj_[static_cast<std::size_t>(u)] & ~full_mask(u + 1); rest != 0;
         rest &= rest - 1) {
      out.push_back({u, std::countr_zero(rest)});
    }
  }
  return out;
}

int Graph::min_degree() const {
  int d = kMaxOrder;
  for (VertexMask row : adj_) d = std::min(d, popcount(row));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (VertexMask row : adj_) d = std::max(d, popcount(row));
  return d;
}

bool Graph::is_regular(int degree) const {
  return std::all_of(adj_.begin(), adj_.end(),
                     [degree](VertexMask row) { return popcount(row) == degree; });
}

Graph make_graph(int order, std::span<const Edge> edges) {
  if (order > kMaxOrder) {
    throw capacity_error("graph order " + std::to_string(order) + " exceeds 64");
  }
  if (order < 1) throw validation_error("graph must have at least one vertex");
  std::vector<VertexMask> adj(static_cast<std::size_t>(order), 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= order || e.v >= order) {
      throw validation_error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") has an endpoint outside 0.." + std::to_string(order - 1));
    }
    if (e.u == e.v) throw validation_error("loop at vertex " + std::to_string(e.u));
    adj[static_cast<std::size_t>(e.u)] |= bit(e.v);
    adj[static_cast<std::size_t>(e.v)] |= bit(e.u);
  }
  return Graph::from_adjacency(std::move(adj));
}

Graph make_graph(int order, std::initializer_list<Edge> edges) {
  return make_graph(order, std::span<const Edge>(edges.begin(), edges.size()));
}

}  // namespace rna
