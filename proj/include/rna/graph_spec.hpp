#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "rna/graph.hpp"
#include "rna/signing.hpp"

namespace rna {

// How a graph is named on the command line:
//   petersen   "n,k"
//   family     "name:n"     (path, cycle, star, wheel, complete)
//   famous     "name"       (petersen, durer, mobius-kantor, ...)
//   construct  "gr:n" | "gs:n" | "reg4nm1:n" | "reg4np1:n" | "fig9"
//   edges      "a-b,c-d,..." (order = largest index + 1)
//   json_file  path to {"order", "edges"}
enum class SpecKind { petersen, family, famous, construct, edges, json_file };

struct GraphSource {
  Graph graph;
  // Set for generalized Petersen graphs; drives u/v vertex names.
  std::optional<PetersenParams> petersen;
  // The labeling that ships with a famous graph or the fig9 graph.
  std::optional<ParityLabeling> builtin_labeling;
  std::string description;
};

// Throws validation_error on malformed text, capacity_error past 64 vertices,
// io_error when a file cannot be read.
GraphSource load_graph(SpecKind kind, std::string_view argument);

// Strict decimal integer; throws validation_error otherwise.
int parse_int(std::string_view text, std::string_view what);

// "a..b" or a single "a".
std::pair<int, int> parse_range(std::string_view text);

}  // namespace rna
