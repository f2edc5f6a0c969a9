// Serial reference solvers: enumerate every floor(n/2)-subset, compute its cut
// from scratch, keep the minimum. The fast kernels are tested against these.

#include <array>
#include <climits>

#include "solver_common.hpp"

namespace rna {

namespace {

// Visits every t-subset of {0..n-1} in lexicographic order of the ascending
// element lists.
template <typename Visit>
void for_each_subset_lex(int n, int t, Visit&& visit) {
  std::array<int, kMaxOrder> c{};
  VertexMask mask = 0;
  for (int i = 0; i < t; ++i) {
    c[static_cast<std::size_t>(i)] = i;
    mask |= bit(i);
  }
  for (;;) {
    visit(mask);
    int i = t - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - t + i) --i;
    if (i < 0) return;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < t; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    mask = 0;
    for (int j = 0; j < t; ++j) mask |= bit(c[static_cast<std::size_t>(j)]);
  }
}

}  // namespace

RnaResult rna_naive(const Graph& g, const SolverOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  detail::check_solver_input(g, kNaiveMaxOrder, options, "naive");

  const int n = g.order();
  int best = INT_MAX;
  VertexMask witness = 0;
  SolverStats stats;
  for_each_subset_lex(n, n / 2, [&](VertexMask side) {
    ++stats.subsets_examined;
    const int size = cut_size(g, side);
    if (size < best) {
      best = size;
      witness = side;
    }
  });
  return detail::make_result(g, best, witness, stats, SolverKind::naive, started);
}

std::vector<std::uint64_t> balanced_cut_spectrum_reference(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw validation_error("cut spectrum needs at least 2 vertices");
  std::vector<std::uint64_t> counts(g.size() + 1, 0);
  for_each_subset_lex(n, n / 2, [&](VertexMask side) {
    if (n % 2 == 0 && (side & bit(0)) == 0) return;
    ++counts[static_cast<std::size_t>(cut_size(g, side))];
  });
  return counts;
}

}  // namespace rna
