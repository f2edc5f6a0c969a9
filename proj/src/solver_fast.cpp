// Revolving-door kernels. The rank range [0, C(pool, pick)) is cut into
// fixed-size chunks; each chunk unranks its first subset, computes that cut
// once, then updates it per swap. Chunk boundaries do not depend on the
// thread count, and per-chunk results are merged in chunk order.

#include <algorithm>
#include <atomic>
#include <climits>

#include "rna/revolving_door.hpp"
#include "solver_common.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace rna {

namespace {

constexpr std::uint64_t kChunk = std::uint64_t{1} << 15;

struct ChunkBest {
  int value = INT_MAX;
  VertexMask side = 0;
  std::uint64_t examined = 0;
};

std::int64_t chunk_count(std::uint64_t total) {
  return static_cast<std::int64_t>((total + kChunk - 1) / kChunk);
}

// Walks ranks [begin, end), calling visit(side, cut) for each subset; stops
// early when visit returns false.
template <typename Visit>
void scan_range(const Graph& g, const detail::BalancedDomain& domain, std::uint64_t begin,
                std::uint64_t end, Visit&& visit) {
  RevolvingDoor door(domain.pool_size, domain.pick, begin);
  VertexMask side = domain.side(door.current());
  int cut = cut_size(g, side);
  for (std::uint64_t rank = begin;;) {
    if (!visit(side, cut)) return;
    if (++rank == end) return;
    int removed = 0;
    int added = 0;
    door.next(removed, added);
    const int out = removed + domain.shift;
    const int in = added + domain.shift;
    cut += detail::cut_delta_remove(g, side, out);
    side &= ~bit(out);
    cut += detail::cut_delta_add(g, side, in);
    side |= bit(in);
  }
}

}  // namespace

RnaResult rna_fast(const Graph& g, const SolverOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  detail::check_solver_input(g, kFastMaxOrder, options, "fast");

  const auto domain = detail::balanced_domain(g.order());
  const std::uint64_t total = binomial(domain.pool_size, domain.pick);
  const std::int64_t chunks = chunk_count(total);
  // sigma^- >= edge connectivity >= 1, so reaching it is optimal.
  const int target = options.early_exit ? std::max(1, edge_connectivity(g)) : -1;
  const int threads = std::max(1, options.threads);

  std::vector<ChunkBest> best(static_cast<std::size_t>(chunks));
  std::atomic<bool> stop{false};

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads > 1)
  for (std::int64_t ci = 0; ci < chunks; ++ci) {
    if (stop.load(std::memory_order_relaxed)) continue;
    const std::uint64_t begin = static_cast<std::uint64_t>(ci) * kChunk;
    const std::uint64_t end = std::min(total, begin + kChunk);
    ChunkBest& mine = best[static_cast<std::size_t>(ci)];
    scan_range(g, domain, begin, end, [&](VertexMask side, int cut) {
      ++mine.examined;
      if (cut < mine.value || (cut == mine.value && lex_less(side, mine.side))) {
        mine.value = cut;
        mine.side = side;
      }
      if (cut <= target) {
        stop.store(true, std::memory_order_relaxed);
        return false;
      }
      // Poll the shared flag once per 1024 subsets.
      return (mine.examined & 1023U) != 0 || !stop.load(std::memory_order_relaxed);
    });
  }

  ChunkBest merged;
  SolverStats stats;
  for (const ChunkBest& c : best) {
    stats.subsets_examined += c.examined;
    if (c.value < merged.value || (c.value == merged.value && lex_less(c.side, merged.side))) {
      merged = c;
    }
  }
  stats.stopped_early = stop.load();
  return detail::make_result(g, merged.value, merged.side, stats, SolverKind::fast, started);
}

std::vector<std::uint64_t> balanced_cut_spectrum(const Graph& g, int threads) {
  if (g.order() < 2) throw validation_error("cut spectrum needs at least 2 vertices");
  const auto domain = detail::balanced_domain(g.order());
  const std::uint64_t total = binomial(domain.pool_size, domain.pick);
  const std::int64_t chunks = chunk_count(total);
  const std::size_t width = g.size() + 1;
  threads = std::max(1, threads);

  std::vector<std::uint64_t> counts(width, 0);
#pragma omp parallel num_threads(threads) if (threads > 1)
  {
    std::vector<std::uint64_t> local(width, 0);
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t ci = 0; ci < chunks; ++ci) {
      const std::uint64_t begin = static_cast<std::uint64_t>(ci) * kChunk;
      const std::uint64_t end = std::min(total, begin + kChunk);
      scan_range(g, domain, begin, end, [&](VertexMask, int cut) {
        ++local[static_cast<std::size_t>(cut)];
        return true;
      });
    }
#pragma omp critical
    for (std::size_t s = 0; s < width; ++s) counts[s] += local[s];
  }
  return counts;
}

}  // namespace rna
