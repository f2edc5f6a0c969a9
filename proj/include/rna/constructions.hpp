#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "rna/graph.hpp"
#include "rna/signing.hpp"

namespace rna {

// ---------------------------------------------------------------------------
// Named generalized Petersen graphs with hand-made labelings

enum class FamousGraph { petersen, durer, mobius_kantor, dodecahedron, desargues, nauru };

inline constexpr std::array<FamousGraph, 6> kFamousGraphs = {
    FamousGraph::petersen,     FamousGraph::durer,     FamousGraph::mobius_kantor,
    FamousGraph::dodecahedron, FamousGraph::desargues, FamousGraph::nauru};

// Accepts the CLI spelling (mobius-kantor) and the underscore form.
std::optional<FamousGraph> parse_famous(std::string_view name);
std::string_view to_string(FamousGraph g);

struct FamousGraphRecord {
  FamousGraph name;
  PetersenParams params;
  ParityLabeling labeling;
  int claimed_rna = 0;

  Graph graph() const { return generalized_petersen(params); }
};

FamousGraphRecord famous(FamousGraph name);
// Throws validation_error on an unknown name.
FamousGraphRecord famous(std::string_view name);

// ---------------------------------------------------------------------------
// Regular graphs with a balanced bridge

// G_r(n): C_{6n-1}^{2n-1} plus v_i v_{i+3n-1} for 1 <= i <= 3n-1. Vertex 0 has
// degree 4n-2, every other vertex 4n-1. n <= 10.
Graph construct_gr(int n);

// Two copies of G_r(n) joined by an edge between their vertices 0:
// (4n-1)-regular on 12n-2 vertices. n <= 5.
Graph construct_regular_4nm1(int n);

// G_s(n): C_{4n+3}^{2n} plus v_i v_{i+2n+1} for 1 <= i <= 2n+1. Vertex 0 has
// degree 4n, every other vertex 4n+1. n <= 15.
Graph construct_gs(int n);

// Two copies of G_s(n) joined at vertex 0: (4n+1)-regular on 8n+6 vertices.
// n <= 7.
Graph construct_regular_4np1(int n);

// The cubic graph of order 10 made of two 5-vertex blocks and a bridge,
// with a labeling giving exactly one negative edge (the bridge).
std::pair<Graph, ParityLabeling> fig9_cubic_order10();

// ---------------------------------------------------------------------------
// Small regular graph census

// Isomorphism-invariant code of a connected graph of order <= 11: the least
// upper-triangle adjacency string (column by column) over every
// breadth-first vertex ordering from every start vertex.
std::uint64_t canonical_code(const Graph& g);

// Every connected cubic graph of the given even order (4 <= order <= 10), one
// per isomorphism class, relabeled to its canonical ordering and sorted by
// canonical code.
std::vector<Graph> enumerate_cubic(int order);

// Whether some simple graph on `side_order` vertices has one vertex of degree
// d-1 and all others of degree d. Such a graph is exactly one side of a
// d-regular graph split by a bridge. Exhaustive; side_order <= 12.
bool bridge_side_exists(int side_order, int degree);

}  // namespace rna
