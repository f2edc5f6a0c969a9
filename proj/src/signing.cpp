#include "rna/signing.hpp"

#include <algorithm>
#include <string>

namespace rna {

ParityLabeling::ParityLabeling(std::vector<int> labels) : labels_(std::move(labels)) {
  const int n = order();
  if (n < 1 || n > kMaxOrder) throw validation_error("labeling must cover 1..64 vertices");
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int v = 0; v < n; ++v) {
    const int label = labels_[static_cast<std::size_t>(v)];
    if (label < 1 || label > n || used[static_cast<std::size_t>(label)]) {
      throw validation_error("labeling is not a bijection onto 1.." + std::to_string(n) +
                             " (vertex " + std::to_string(v) + " has label " +
                             std::to_string(label) + ")");
    }
    used[static_cast<std::size_t>(label)] = true;
    if (label % 2 == 1) odd_ |= bit(v);
  }
}

namespace {

void require_same_order(const Graph& g, const ParityLabeling& f) {
  if (g.order() != f.order()) {
    throw validation_error("labeling has " + std::to_string(f.order()) +
                           " labels for a graph of order " + std::to_string(g.order()));
  }
}

}  // namespace

SignedEdgeSet signs_from_labeling(const Graph& g, const ParityLabeling& f) {
  require_same_order(g, f);
  SignedEdgeSet s;
  const VertexMask odd = f.odd_class();
  for (const Edge& e : g.edges()) {
    const bool odd_u = (odd & bit(e.u)) != 0;
    const bool odd_v = (odd & bit(e.v)) != 0;
    (odd_u == odd_v ? s.positive : s.negative).push_back(e);
  }
  return s;
}

int negative_count(const Graph& g, const ParityLabeling& f) {
  require_same_order(g, f);
  return cut_size(g, f.odd_class());
}

bool is_balanced(const Graph& g, const SignedEdgeSet& s) {
  const int n = g.order();
  std::vector<VertexMask> negative(static_cast<std::size_t>(n), 0);
  for (const Edge& e : s.negative) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || !g.has_edge(e.u, e.v)) {
      throw validation_error("signed edge set names a non-edge");
    }
    negative[static_cast<std::size_t>(e.u)] |= bit(e.v);
    negative[static_cast<std::size_t>(e.v)] |= bit(e.u);
  }
  std::vector<VertexMask> positive(static_cast<std::size_t>(n), 0);
  for (const Edge& e : s.positive) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || !g.has_edge(e.u, e.v)) {
      throw validation_error("signed edge set names a non-edge");
    }
    positive[static_cast<std::size_t>(e.u)] |= bit(e.v);
    positive[static_cast<std::size_t>(e.v)] |= bit(e.u);
  }
  for (int v = 0; v < n; ++v) {
    const auto i = static_cast<std::size_t>(v);
    if ((negative[i] & positive[i]) != 0 || (negative[i] | positive[i]) != g.neighbors(v)) {
      throw validation_error("signed edge set does not partition the edges");
    }
  }

  // BFS 2-coloring; color bit set = second class.
  VertexMask seen = 0;
  VertexMask color = 0;
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(n));
  for (int root = 0; root < n; ++root) {
    if ((seen & bit(root)) != 0) continue;
    seen |= bit(root);
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      const bool v_color = (color & bit(v)) != 0;
      for (VertexMask rest = g.neighbors(v); rest != 0; rest &= rest - 1) {
        const int w = std::countr_zero(rest);
        const bool crosses = (negative[static_cast<std::size_t>(v)] & bit(w)) != 0;
        const bool want = v_color != crosses;
        if ((seen & bit(w)) == 0) {
          seen |= bit(w);
          if (want) color |= bit(w);
          queue.push_back(w);
        } else if (((color & bit(w)) != 0) != want) {
          return false;
        }
      }
    }
  }
  return true;
}

ParityLabeling labeling_from_subset(const Graph& g, VertexMask side_even) {
  const int n = g.order();
  if ((side_even & ~g.vertices()) != 0) throw validation_error("subset contains non-vertices");
  if (popcount(side_even) != n / 2) {
    throw validation_error("even side must have exactly floor(n/2) = " + std::to_string(n / 2) +
                           " vertices, got " + std::to_string(popcount(side_even)));
  }
  std::vector<int> labels(static_cast<std::size_t>(n));
  int next_even = 2;
  int next_odd = 1;
  for (int v = 0; v < n; ++v) {
    if ((side_even & bit(v)) != 0) {
      labels[static_cast<std::size_t>(v)] = next_even;
      next_even += 2;
    } else {
      labels[static_cast<std::size_t>(v)] = next_odd;
      next_odd += 2;
    }
  }
  return ParityLabeling(std::move(labels));
}

}  // namespace rna
