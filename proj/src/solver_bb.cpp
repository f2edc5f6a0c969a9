#include <algorithm>
#include <array>

#include "solver_common.hpp"

namespace rna {

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, bool early_exit)
      : g_(g), n_(g.order()), cap_a_(n_ / 2), cap_b_(n_ - n_ / 2) {
    build_order();
    target_ = early_exit ? std::max(1, edge_connectivity(g)) : -1;
    seed_incumbent();
  }

  void run() {
    if (done_) return;
    ++nodes_;
    // Even n: A and A^c are interchangeable, so pin the first vertex to A.
    if (n_ % 2 == 0) {
      descend(1, bit(order_[0]), 0, 0);
    } else {
      descend(0, 0, 0, 0);
    }
  }

  int best() const noexcept { return best_; }
  VertexMask witness() const noexcept { return witness_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  bool stopped() const noexcept { return done_; }

 private:
  // Max-adjacency order from vertex 0: next is the unplaced vertex with the
  // most already-placed neighbors, so costs are committed early.
  void build_order() {
    VertexMask placed = bit(0);
    order_[0] = 0;
    for (int i = 1; i < n_; ++i) {
      int pick = -1;
      int pick_links = -1;
      for (VertexMask rest = g_.vertices() & ~placed; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const int links = popcount(g_.neighbors(v) & placed);
        if (links > pick_links) {
          pick = v;
          pick_links = links;
        }
      }
      order_[static_cast<std::size_t>(i)] = pick;
      placed |= bit(pick);
    }
  }

  // First floor(n/2) vertices of the search order form A.
  void seed_incumbent() {
    VertexMask a = 0;
    for (int i = 0; i < cap_a_; ++i) a |= bit(order_[static_cast<std::size_t>(i)]);
    best_ = cut_size(g_, a);
    witness_ = a;
    if (best_ <= target_) done_ = true;
  }

  // Unplaced vertices each add at least min(links to A, links to B); those
  // edges are distinct across vertices since one end is already placed.
  int residual_bound(VertexMask a, VertexMask b, int depth) const {
    int bound = 0;
    for (int i = depth; i < n_; ++i) {
      const VertexMask nv = g_.neighbors(order_[static_cast<std::size_t>(i)]);
      bound += std::min(popcount(nv & a), popcount(nv & b));
    }
    return bound;
  }

  void descend(int depth, VertexMask a, VertexMask b, int committed) {
    if (depth == n_) {
      if (committed < best_) {
        best_ = committed;
        witness_ = a;
        if (best_ <= target_) done_ = true;
      }
      return;
    }
    if (committed + residual_bound(a, b, depth) >= best_) return;

    const int v = order_[static_cast<std::size_t>(depth)];
    const VertexMask nv = g_.neighbors(v);
    const int to_a = popcount(nv & b);
    const int to_b = popcount(nv & a);
    // Try the cheaper side first.
    const bool a_first = to_a <= to_b;
    for (int pass = 0; pass < 2 && !done_; ++pass) {
      const bool into_a = (pass == 0) == a_first;
      if (into_a && popcount(a) < cap_a_) {
        ++nodes_;
        descend(depth + 1, a | bit(v), b, committed + to_a);
      } else if (!into_a && popcount(b) < cap_b_) {
        ++nodes_;
        descend(depth + 1, a, b | bit(v), committed + to_b);
      }
    }
  }

  const Graph& g_;
  int n_;
  int cap_a_;
  int cap_b_;
  std::array<int, kMaxOrder> order_{};
  int target_ = -1;
  int best_ = 0;
  VertexMask witness_ = 0;
  std::uint64_t nodes_ = 0;
  bool done_ = false;
};

}  // namespace

RnaResult rna_branch_bound(const Graph& g, const SolverOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  detail::check_solver_input(g, kFastMaxOrder, options, "bb");

  BranchAndBound search(g, options.early_exit);
  search.run();
  SolverStats stats;
  stats.subsets_examined = search.nodes();
  stats.stopped_early = search.stopped();
  return detail::make_result(g, search.best(), search.witness(), stats, SolverKind::branch_bound,
                             started);
}

std::string_view to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::naive: return "naive";
    case SolverKind::fast: return "fast";
    case SolverKind::branch_bound: return "bb";
  }
  return "?";
}

std::optional<SolverKind> parse_solver(std::string_view name) {
  if (name == "naive") return SolverKind::naive;
  if (name == "fast") return SolverKind::fast;
  if (name == "bb") return SolverKind::branch_bound;
  return std::nullopt;
}

RnaResult solve(SolverKind kind, const Graph& g, const SolverOptions& options) {
  switch (kind) {
    case SolverKind::naive: return rna_naive(g, options);
    case SolverKind::fast: return rna_fast(g, options);
    case SolverKind::branch_bound: return rna_branch_bound(g, options);
  }
  throw validation_error("unknown solver");
}

}  // namespace rna
