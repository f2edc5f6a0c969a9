#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "rna/constructions.hpp"

namespace rna {

namespace {

constexpr int kMaxCanonicalOrder = 11;

// Least code over breadth-first orderings. The code is column-major over the
// upper triangle (bit (i,j), i < j, in order of j then i), so the code of a
// partial ordering is a prefix of every completion and can be pruned early.
class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), m_(g.order()) {}

  std::pair<std::uint64_t, std::vector<int>> run() {
    for (int start = 0; start < m_; ++start) {
      order_.assign(1, start);
      placed_ = bit(start);
      extend(0, 0, 0);
    }
    return {best_, best_order_};
  }

 private:
  void extend(int head, std::uint64_t code, int bits) {
    const int k = static_cast<int>(order_.size());
    if (k == m_) {
      if (!found_ || code < best_) {
        found_ = true;
        best_ = code;
        best_order_ = order_;
      }
      return;
    }
    if (found_ && code > (best_ >> (total_bits() - bits))) return;

    while (head < k && (g_.neighbors(order_[static_cast<std::size_t>(head)]) & ~placed_) == 0) {
      ++head;
    }
    if (head == k) return;  // disconnected
    for (VertexMask rest = g_.neighbors(order_[static_cast<std::size_t>(head)]) & ~placed_;
         rest != 0; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      std::uint64_t next = code;
      for (int i = 0; i < k; ++i) {
        next = (next << 1) | (g_.has_edge(order_[static_cast<std::size_t>(i)], w) ? 1U : 0U);
      }
      order_.push_back(w);
      placed_ |= bit(w);
      extend(head, next, bits + k);
      placed_ &= ~bit(w);
      order_.pop_back();
    }
  }

  int total_bits() const noexcept { return m_ * (m_ - 1) / 2; }

  const Graph& g_;
  int m_;
  std::vector<int> order_;
  VertexMask placed_ = 0;
  bool found_ = false;
  std::uint64_t best_ = 0;
  std::vector<int> best_order_;
};

void check_canonical_order(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw capacity_error("canonical codes support order <= " +
                         std::to_string(kMaxCanonicalOrder));
  }
  if (!is_connected(g)) throw validation_error("canonical codes need a connected graph");
}

Graph relabel(const Graph& g, const std::vector<int>& order) {
  std::vector<int> position(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    edges.push_back(
        {position[static_cast<std::size_t>(e.u)], position[static_cast<std::size_t>(e.v)]});
  }
  return make_graph(g.order(), edges);
}

// Generates connected d-regular graphs whose vertex numbering is a
// breadth-first order from vertex 0. Every connected d-regular graph has such
// a numbering, so every isomorphism class appears at least once.
class RegularGenerator {
 public:
  RegularGenerator(int order, int degree)
      : m_(order), d_(degree), adj_(static_cast<std::size_t>(order), 0) {}

  void run(std::function<void(const std::vector<VertexMask>&)> emit) {
    emit_ = std::move(emit);
    vertex(0, 1);
  }

 private:
  int deg(int v) const { return popcount(adj_[static_cast<std::size_t>(v)]); }

  void link(int a, int b) {
    adj_[static_cast<std::size_t>(a)] |= bit(b);
    adj_[static_cast<std::size_t>(b)] |= bit(a);
  }

  void unlink(int a, int b) {
    adj_[static_cast<std::size_t>(a)] &= ~bit(b);
    adj_[static_cast<std::size_t>(b)] &= ~bit(a);
  }

  // Completes vertex i; vertices below `discovered` have been reached.
  void vertex(int i, int discovered) {
    if (i == m_) {
      emit_(adj_);
      return;
    }
    if (i >= discovered) return;
    pick_old(i, discovered, i + 1, d_ - deg(i));
  }

  // Chooses links from i to already discovered vertices >= from, then fills
  // the rest with the next undiscovered ones.
  void pick_old(int i, int discovered, int from, int need) {
    if (discovered + need <= m_) {
      for (int c = 0; c < need; ++c) link(i, discovered + c);
      vertex(i + 1, discovered + need);
      for (int c = 0; c < need; ++c) unlink(i, discovered + c);
    }
    if (need == 0) return;
    for (int j = from; j < discovered; ++j) {
      if (deg(j) >= d_ || (adj_[static_cast<std::size_t>(i)] & bit(j)) != 0) continue;
      link(i, j);
      pick_old(i, discovered, j + 1, need - 1);
      unlink(i, j);
    }
  }

  int m_;
  int d_;
  std::vector<VertexMask> adj_;
  std::function<void(const std::vector<VertexMask>&)> emit_;
};

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  check_canonical_order(g);
  return Canonizer(g).run().first;
}

std::vector<Graph> enumerate_cubic(int order) {
  if (order % 2 != 0) throw validation_error("cubic graphs have even order");
  if (order < 4 || order > 10) throw validation_error("enumerate_cubic supports orders 4..10");

  std::map<std::uint64_t, Graph> classes;
  RegularGenerator(order, 3).run([&](const std::vector<VertexMask>& adj) {
    const Graph g = Graph::from_adjacency(adj);
    auto [code, ordering] = Canonizer(g).run();
    if (!classes.contains(code)) classes.emplace(code, relabel(g, ordering));
  });

  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [code, g] : classes) out.push_back(std::move(g));
  return out;
}

namespace {

bool fill_side(std::vector<int>& remaining, int i, int from) {
  const int m = static_cast<int>(remaining.size());
  if (i == m) return true;
  if (remaining[static_cast<std::size_t>(i)] == 0) return fill_side(remaining, i + 1, i + 2);
  for (int j = std::max(from, i + 1); j < m; ++j) {
    if (remaining[static_cast<std::size_t>(j)] == 0) continue;
    --remaining[static_cast<std::size_t>(i)];
    --remaining[static_cast<std::size_t>(j)];
    if (fill_side(remaining, i, j + 1)) return true;
    ++remaining[static_cast<std::size_t>(i)];
    ++remaining[static_cast<std::size_t>(j)];
  }
  return false;
}

}  // namespace

bool bridge_side_exists(int side_order, int degree) {
  if (side_order < 1 || side_order > 12) throw validation_error("side order must be in 1..12");
  if (degree < 1) throw validation_error("degree must be positive");
  std::vector<int> remaining(static_cast<std::size_t>(side_order), degree);
  remaining[0] = degree - 1;
  return fill_side(remaining, 0, 1);
}

}  // namespace rna
