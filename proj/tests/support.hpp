#pragma once

#include "oracle.hpp"
#include <span>

#include "rna/graph.hpp"

inline oracle::EdgeList edge_list(const rna::Graph& g) {
  oracle::EdgeList out;
  for (const rna::Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

inline rna::Graph graph_of(int n, const oracle::EdgeList& edges) {
  std::vector<rna::Edge> es;
  for (auto [a, b] : edges) es.push_back({a, b});
  return rna::make_graph(n, es);
}

inline rna::Graph random_graph(int n, double p, std::mt19937& rng) {
  return graph_of(n, oracle::random_connected(n, p, rng));
}

inline std::vector<int> to_vector(std::span<const int> s) { return {s.begin(), s.end()}; }
