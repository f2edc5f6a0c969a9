#include "rna/graph_spec.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "rna/constructions.hpp"
#include "rna/io.hpp"

namespace rna {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::pair<std::string_view, std::string_view> split_once(std::string_view s, char sep,
                                                         std::string_view what) {
  const auto at = s.find(sep);
  if (at == std::string_view::npos) {
    throw validation_error(std::string(what) + ": expected '" + std::string(1, sep) + "' in '" +
                           std::string(s) + "'");
  }
  return {trim(s.substr(0, at)), trim(s.substr(at + 1))};
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  int order = 0;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    const auto [a, b] = split_once(item, '-', "--edges");
    const Edge e{parse_int(a, "edge endpoint"), parse_int(b, "edge endpoint")};
    if (e.u < 0 || e.v < 0) throw validation_error("edge endpoints must be non-negative");
    if (e.u >= kMaxOrder || e.v >= kMaxOrder) {
      throw capacity_error("edge endpoint exceeds the 64-vertex limit");
    }
    order = std::max({order, e.u + 1, e.v + 1});
    edges.push_back(e);
  }
  if (edges.empty()) throw validation_error("--edges needs at least one edge");
  return make_graph(order, edges);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GraphSource load_construction(std::string_view arg) {
  if (arg == "fig9") {
    auto [g, f] = fig9_cubic_order10();
    return {std::move(g), std::nullopt, std::move(f), "fig9"};
  }
  const auto [name, n_text] = split_once(arg, ':', "--construct");
  const int n = parse_int(n_text, "construction parameter");
  const std::string desc = std::string(name) + ":" + std::to_string(n);
  if (name == "gr") return {construct_gr(n), std::nullopt, std::nullopt, desc};
  if (name == "gs") return {construct_gs(n), std::nullopt, std::nullopt, desc};
  if (name == "reg4nm1") return {construct_regular_4nm1(n), std::nullopt, std::nullopt, desc};
  if (name == "reg4np1") return {construct_regular_4np1(n), std::nullopt, std::nullopt, desc};
  throw validation_error("unknown construction '" + std::string(name) +
                         "' (expected gr, gs, reg4nm1, reg4np1 or fig9)");
}

}  // namespace

int parse_int(std::string_view text, std::string_view what) {
  text = trim(text);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw validation_error(std::string(what) + ": not an integer: '" + std::string(text) + "'");
  }
  return value;
}

std::pair<int, int> parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int n = parse_int(text, "range");
    return {n, n};
  }
  const int lo = parse_int(text.substr(0, dots), "range start");
  const int hi = parse_int(text.substr(dots + 2), "range end");
  if (lo > hi) throw validation_error("empty range " + std::string(text));
  return {lo, hi};
}

GraphSource load_graph(SpecKind kind, std::string_view arg) {
  switch (kind) {
    case SpecKind::petersen: {
      const auto [n, k] = split_once(arg, ',', "--petersen");
      const auto p = PetersenParams::make(parse_int(n, "n"), parse_int(k, "k"));
      return {generalized_petersen(p), p, std::nullopt,
              "P(" + std::to_string(p.n) + "," + std::to_string(p.k) + ")"};
    }
    case SpecKind::family: {
      const auto [name, n] = split_once(arg, ':', "--family");
      const auto family = parse_family(name);
      if (!family) {
        throw validation_error("unknown family '" + std::string(name) +
                               "' (expected path, cycle, star, wheel or complete)");
      }
      const int count = parse_int(n, "family size");
      return {family_graph(*family, count), std::nullopt, std::nullopt,
              std::string(name) + ":" + std::to_string(count)};
    }
    case SpecKind::famous: {
      FamousGraphRecord rec = famous(trim(arg));
      Graph g = rec.graph();
      return {std::move(g), rec.params, std::move(rec.labeling), std::string(to_string(rec.name))};
    }
    case SpecKind::construct:
      return load_construction(trim(arg));
    case SpecKind::edges:
      return {parse_edge_list(arg), std::nullopt, std::nullopt, "edges"};
    case SpecKind::json_file: {
      const std::string path(arg);
      const std::string text = read_file(path);
      Json doc = Json::parse(text, nullptr, false);
      if (doc.is_discarded()) throw validation_error(path + ": invalid JSON");
      return {graph_from_json(doc), std::nullopt, std::nullopt, path};
    }
  }
  throw validation_error("unknown graph spec");
}

}  // namespace rna
