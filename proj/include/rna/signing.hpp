#pragma once

#include <span>
#include <vector>

#include "rna/graph.hpp"

namespace rna {

// A bijection f : V -> {1..n}. Only the parity of each label affects signs.
class ParityLabeling {
 public:
  // Throws validation_error unless `labels` is a permutation of 1..labels.size().
  explicit ParityLabeling(std::vector<int> labels);

  int order() const noexcept { return static_cast<int>(labels_.size()); }
  int operator[](int v) const { return labels_.at(static_cast<std::size_t>(v)); }
  std::span<const int> labels() const noexcept { return labels_; }

  VertexMask odd_class() const noexcept { return odd_; }
  VertexMask even_class() const noexcept { return full_mask(order()) & ~odd_; }

  friend bool operator==(const ParityLabeling& a, const ParityLabeling& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<int> labels_;
  VertexMask odd_ = 0;
};

// Edge signs induced by a labeling: an edge is negative iff its endpoint
// labels differ in parity.
struct SignedEdgeSet {
  std::vector<Edge> negative;
  std::vector<Edge> positive;
};

SignedEdgeSet signs_from_labeling(const Graph& g, const ParityLabeling& f);

inline int negative_count(const SignedEdgeSet& s) noexcept {
  return static_cast<int>(s.negative.size());
}

// Same count straight from the labeling: the cut between the parity classes.
int negative_count(const Graph& g, const ParityLabeling& f);

// Harary's criterion: vertices 2-color with negative edges crossing colors and
// positive edges inside them. Each component is checked independently. Throws
// validation_error if `s` is not a partition of E(g).
bool is_balanced(const Graph& g, const SignedEdgeSet& s);

// Canonical labeling for a nearly balanced partition: the vertices of
// `side_even` (exactly floor(n/2) of them) get 2, 4, ... in ascending vertex
// order, the rest get 1, 3, ... ascending.
ParityLabeling labeling_from_subset(const Graph& g, VertexMask side_even);

}  // namespace rna
