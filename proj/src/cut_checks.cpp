#include <cstdlib>
#include <string>

#include "rna/solver.hpp"

namespace rna {

std::optional<Edge> rna_one_check(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) return std::nullopt;
  const int n = g.order();
  for (const Edge& e : bridges(g)) {
    // Side of e.u once the bridge is gone.
    const int side = popcount(component_of(g, e.u, g.vertices() & ~bit(e.v)));
    if (std::abs(n - 2 * side) <= 1) return e;
  }
  return std::nullopt;
}

bool verify_no_cut(const Graph& g, int size, CutParity parity, int threads,
                   std::optional<int> max_order) {
  const int guard = max_order.value_or(kSpectrumMaxOrder);
  if (g.order() > guard) {
    throw capacity_error("exhaustive cut check is limited to order " + std::to_string(guard) +
                         ", graph has " + std::to_string(g.order()));
  }
  const std::vector<std::uint64_t> counts = balanced_cut_spectrum(g, threads);
  for (std::size_t s = 0; s < counts.size(); ++s) {
    if (counts[s] == 0) continue;
    switch (parity) {
      case CutParity::exact:
        if (static_cast<int>(s) == size) return false;
        break;
      case CutParity::odd:
        if (s % 2 == 1) return false;
        break;
      case CutParity::even:
        if (s % 2 == 0) return false;
        break;
    }
  }
  return true;
}

}  // namespace rna
