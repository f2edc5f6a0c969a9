#pragma once

#include <chrono>
#include <string>

#include "rna/solver.hpp"

namespace rna::detail {

// Shared pre-checks: order >= 2, order within the guard, connected.
inline void check_solver_input(const Graph& g, int default_guard, const SolverOptions& options,
                               std::string_view solver) {
  if (g.order() < 2) throw validation_error("rna number needs a graph with at least 2 vertices");
  const int guard = options.max_order.value_or(default_guard);
  if (g.order() > guard) {
    std::string msg = std::string(solver) + " solver is limited to order " +
                      std::to_string(guard) + ", graph has " + std::to_string(g.order());
    if (solver == "naive") msg += "; use the fast solver or raise --max-order";
    else msg += "; raise --max-order to override";
    throw capacity_error(msg);
  }
  if (!is_connected(g)) throw validation_error("rna number is defined for connected graphs only");
}

// The subsets a balanced scan visits: A = fixed | (combination << shift),
// where the combination is a t-subset of pool_size elements. For even n,
// vertex 0 is fixed inside A and the rest is drawn from 1..n-1.
struct BalancedDomain {
  VertexMask fixed = 0;
  int shift = 0;
  int pool_size = 0;
  int pick = 0;

  VertexMask side(VertexMask combination) const noexcept { return fixed | (combination << shift); }
};

inline BalancedDomain balanced_domain(int order) {
  BalancedDomain d;
  if (order % 2 == 0) {
    d.fixed = bit(0);
    d.shift = 1;
    d.pool_size = order - 1;
    d.pick = order / 2 - 1;
  } else {
    d.pool_size = order;
    d.pick = order / 2;
  }
  return d;
}

// Cut change when x leaves side A (x in A), then when y joins A (y not in A).
inline int cut_delta_remove(const Graph& g, VertexMask side_a, int x) noexcept {
  const VertexMask nx = g.adjacency()[static_cast<std::size_t>(x)];
  return 2 * popcount(nx & side_a) - popcount(nx);
}

inline int cut_delta_add(const Graph& g, VertexMask side_a, int y) noexcept {
  const VertexMask ny = g.adjacency()[static_cast<std::size_t>(y)];
  return popcount(ny) - 2 * popcount(ny & side_a);
}

inline RnaResult make_result(const Graph& g, int value, VertexMask side, SolverStats stats,
                             SolverKind kind, std::chrono::steady_clock::time_point started) {
  stats.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - started);
  return RnaResult{value, side, labeling_from_subset(g, side), stats, kind};
}

}  // namespace rna::detail
