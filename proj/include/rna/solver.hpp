#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rna/graph.hpp"
#include "rna/signing.hpp"

namespace rna {

enum class SolverKind { naive, fast, branch_bound };

// "naive", "fast", "bb".
std::string_view to_string(SolverKind kind);
std::optional<SolverKind> parse_solver(std::string_view name);

// Enumeration guards: largest order each solver accepts by default.
inline constexpr int kNaiveMaxOrder = 28;
inline constexpr int kFastMaxOrder = 40;

struct SolverOptions {
  // Replaces the solver's default order guard.
  std::optional<int> max_order;
  // Stop as soon as the incumbent reaches max(1, edge connectivity).
  bool early_exit = true;
  // Worker threads for the fast kernel; 1 runs it serially.
  int threads = 1;
};

struct SolverStats {
  // naive/fast: nearly balanced subsets whose cut was evaluated.
  // bb: search-tree nodes visited.
  std::uint64_t subsets_examined = 0;
  std::chrono::nanoseconds elapsed{0};
  bool stopped_early = false;
};

// The rna number sigma^-(G) with a witness: a floor(n/2)-subset whose cut
// realizes it, and the canonical labeling that puts that subset on the even
// labels. cut_of(g, witness_side).size() == value.
struct RnaResult {
  int value = 0;
  VertexMask witness_side = 0;
  ParityLabeling witness_labeling;
  SolverStats stats;
  SolverKind solver = SolverKind::fast;
};

// Exhaustive minimum over every floor(n/2)-subset in lexicographic order; the
// witness is the lexicographically least minimizer. Serial reference.
// Throws validation_error for order < 2 or a disconnected graph, and
// capacity_error above the order guard.
RnaResult rna_naive(const Graph& g, const SolverOptions& options = {});

// Same value as rna_naive. Fixes vertex 0 inside A for even n, walks the
// subsets in revolving-door order updating the cut in O(1) per step, and can
// split the rank range across OpenMP threads. Without an early exit the
// witness is the lexicographically least minimizer it visited, independent of
// the thread count.
RnaResult rna_fast(const Graph& g, const SolverOptions& options = {});

// Same value; depth-first assignment of vertices to A / A^c pruned by a
// committed-plus-residual lower bound and the side capacities.
RnaResult rna_branch_bound(const Graph& g, const SolverOptions& options = {});

RnaResult solve(SolverKind kind, const Graph& g, const SolverOptions& options = {});

// sigma^-(G) == 1 iff some bridge splits G into parts whose orders differ by
// at most one. Returns such a bridge, or nullopt (also for disconnected g).
std::optional<Edge> rna_one_check(const Graph& g);

// ---------------------------------------------------------------------------
// Exhaustive balanced-cut spectra

inline constexpr int kSpectrumMaxOrder = 24;

// counts[s] = number of enumerated floor(n/2)-subsets A with |[A:A^c]| == s.
// For even n only subsets containing vertex 0 are enumerated, so each
// unordered equal-sided cut is counted once. Parallel kernel.
std::vector<std::uint64_t> balanced_cut_spectrum(const Graph& g, int threads = 1);

// Serial reference for balanced_cut_spectrum (lexicographic enumeration,
// cut recomputed from scratch).
std::vector<std::uint64_t> balanced_cut_spectrum_reference(const Graph& g);

enum class CutParity { exact, odd, even };

// True iff g has no nearly balanced cut of the given size (exact) or of any
// odd / even size; `size` is ignored for odd and even. Exhaustive; throws
// capacity_error above kSpectrumMaxOrder unless `max_order` raises it.
bool verify_no_cut(const Graph& g, int size, CutParity parity, int threads = 1,
                   std::optional<int> max_order = std::nullopt);

}  // namespace rna
