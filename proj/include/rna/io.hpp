#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rna/graph.hpp"
#include "rna/signing.hpp"
#include "rna/solver.hpp"

namespace rna {

using Json = nlohmann::ordered_json;

// {"order": n, "edges": [[a,b], ...]} with canonical edge order.
Json graph_to_json(const Graph& g);
// Throws validation_error on a malformed document.
Graph graph_from_json(const Json& doc);

// {"labels": [f(0), f(1), ...]}.
Json labeling_to_json(const ParityLabeling& f);
ParityLabeling labeling_from_json(const Json& doc);

// {"rna", "witness_side", "witness_labels", "subsets_examined", "solver"}.
// Elapsed time is left out so the document is byte-stable.
Json result_to_json(const RnaResult& r);

struct DotOptions {
  // Names vertices u0.., v0.. instead of plain indices.
  std::optional<PetersenParams> petersen;
  // Adds label attributes and draws negative edges dashed.
  std::optional<ParityLabeling> labeling;
  std::string name = "G";
};

std::string to_dot(const Graph& g, const DotOptions& options = {});

// Vertex name used by to_dot.
std::string vertex_name(int v, const std::optional<PetersenParams>& petersen);

}  // namespace rna
