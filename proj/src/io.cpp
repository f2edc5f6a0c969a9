#include "rna/io.hpp"

#include <sstream>

namespace rna {

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  Json doc;
  doc["order"] = g.order();
  doc["edges"] = std::move(edges);
  return doc;
}

Graph graph_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("edges")) {
    throw validation_error("graph JSON needs \"order\" and \"edges\"");
  }
  const Json& order = doc.at("order");
  if (!order.is_number_integer() || order.get<long long>() < 1) {
    throw validation_error("graph JSON \"order\" must be a positive integer");
  }
  if (order.get<long long>() > kMaxOrder) {
    throw capacity_error("graph order exceeds 64 vertices");
  }
  const Json& list = doc.at("edges");
  if (!list.is_array()) throw validation_error("graph JSON \"edges\" must be an array");
  std::vector<Edge> edges;
  for (const Json& e : list) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw validation_error("each edge must be a pair of vertex indices");
    }
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return make_graph(order.get<int>(), edges);
}

Json labeling_to_json(const ParityLabeling& f) {
  Json doc;
  doc["labels"] = Json(std::vector<int>(f.labels().begin(), f.labels().end()));
  return doc;
}

ParityLabeling labeling_from_json(const Json& doc) {
  const Json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("labels")) throw validation_error("labeling JSON needs \"labels\"");
    list = &doc.at("labels");
  }
  if (!list->is_array()) throw validation_error("labels must be an array of integers");
  std::vector<int> labels;
  for (const Json& x : *list) {
    if (!x.is_number_integer()) throw validation_error("labels must be integers");
    labels.push_back(x.get<int>());
  }
  return ParityLabeling(std::move(labels));
}

Json result_to_json(const RnaResult& r) {
  const auto labels = r.witness_labeling.labels();
  Json doc;
  doc["rna"] = r.value;
  doc["witness_side"] = vertices_of(r.witness_side);
  doc["witness_labels"] = std::vector<int>(labels.begin(), labels.end());
  doc["subsets_examined"] = r.stats.subsets_examined;
  doc["solver"] = std::string(to_string(r.solver));
  return doc;
}

std::string vertex_name(int v, const std::optional<PetersenParams>& petersen) {
  if (!petersen) return std::to_string(v);
  return (v < petersen->n ? "u" : "v") + std::to_string(v % petersen->n);
}

std::string to_dot(const Graph& g, const DotOptions& options) {
  if (options.petersen && options.petersen->order() != g.order()) {
    throw validation_error("Petersen naming does not match the graph order");
  }
  if (options.labeling && options.labeling->order() != g.order()) {
    throw validation_error("labeling order does not match the graph order");
  }
  std::ostringstream out;
  out << "graph " << options.name << " {\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "  " << vertex_name(v, options.petersen);
    if (options.labeling) out << " [label=\"" << (*options.labeling)[v] << "\"]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << vertex_name(e.u, options.petersen) << " -- "
        << vertex_name(e.v, options.petersen);
    if (options.labeling && ((*options.labeling)[e.u] - (*options.labeling)[e.v]) % 2 != 0) {
      out << " [style=dashed]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace rna
