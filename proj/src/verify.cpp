#include "rna/verify.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rna/constructions.hpp"
#include "rna/revolving_door.hpp"

namespace rna {

Graph random_connected_graph(int order, double density, std::mt19937_64& rng) {
  if (order < 1 || order > kMaxOrder) throw validation_error("random graph order out of range");
  std::vector<Edge> edges;
  for (int v = 1; v < order; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    edges.push_back({parent(rng), v});
  }
  std::bernoulli_distribution coin(density);
  for (int a = 0; a < order; ++a) {
    for (int b = a + 1; b < order; ++b) {
      if (coin(rng)) edges.push_back({a, b});
    }
  }
  return make_graph(order, edges);
}

ParityLabeling random_labeling(int order, std::mt19937_64& rng) {
  std::vector<int> labels(static_cast<std::size_t>(order));
  std::iota(labels.begin(), labels.end(), 1);
  std::shuffle(labels.begin(), labels.end(), rng);
  return ParityLabeling(std::move(labels));
}

bool meets_expectation(const Json& expected, const Json& computed) {
  if (expected.is_object() && (expected.contains("min") || expected.contains("max"))) {
    if (!computed.is_number()) return false;
    if (expected.contains("min") && computed < expected.at("min")) return false;
    if (expected.contains("max") && computed > expected.at("max")) return false;
    return true;
  }
  return expected == computed;
}

namespace {

struct Check {
  Json params;
  Json expected;
  std::function<Json()> compute;
};

Json at_least(int lo) { return Json{{"min", lo}}; }
Json between(int lo, int hi) { return Json{{"min", lo}, {"max", hi}}; }

class Context {
 public:
  explicit Context(const VerifyOptions& options) : options_(options) {}

  const VerifyOptions& options() const noexcept { return options_; }

  bool keep(int n) const {
    if (options_.n_range && (n < options_.n_range->first || n > options_.n_range->second)) {
      return false;
    }
    if (options_.parity == ParityFilter::even && n % 2 != 0) return false;
    if (options_.parity == ParityFilter::odd && n % 2 == 0) return false;
    return true;
  }

  // Default range [lo, hi] narrowed by the user's filters.
  std::vector<int> ns(int lo, int hi) const {
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n) {
      if (keep(n)) out.push_back(n);
    }
    return out;
  }

  int rna(const Graph& g) const {
    SolverOptions so;
    so.max_order = options_.max_order;
    return solve(options_.solver, g, so).value;
  }

  int closed_form(ClosedFormFamily f, int n) const { return options_.closed_form(f, n); }

  int random_samples(int full) const { return options_.quick ? std::max(1, full / 3) : full; }

 private:
  const VerifyOptions& options_;
};

// A reproducible random connected graph for sample `index`.
struct RandomGraphSpec {
  int order;
  std::uint64_t seed;
  double density;

  Graph make() const {
    std::mt19937_64 rng(seed);
    return random_connected_graph(order, density, rng);
  }

  Json params() const { return {{"graph", "random"}, {"order", order}, {"seed", seed}}; }
};

std::vector<RandomGraphSpec> random_specs(const Context& ctx, int count, int lo, int hi,
                                          std::uint64_t base_seed) {
  std::vector<RandomGraphSpec> out;
  for (int i = 0; i < count; ++i) {
    const int order = lo + i % (hi - lo + 1);
    if (!ctx.keep(order)) continue;
    const double density = 0.1 + 0.1 * (i % 4);
    out.push_back({order, base_seed + static_cast<std::uint64_t>(i), density});
  }
  return out;
}

Json petersen_params(int n, int k) { return {{"graph", "P(n,k)"}, {"n", n}, {"k", k}}; }

std::vector<std::pair<int, int>> petersen_pairs(const Context& ctx, int lo, int hi) {
  std::vector<std::pair<int, int>> out;
  for (int n : ctx.ns(lo, hi)) {
    for (int k = 1; 2 * k < n; ++k) out.emplace_back(n, k);
  }
  return out;
}

// --- closed forms ----------------------------------------------------------

std::vector<Check> family_checks(const Context& ctx, Family family, ClosedFormFamily cf, int lo,
                                 int hi) {
  std::vector<Check> out;
  for (int n : ctx.ns(lo, hi)) {
    out.push_back({{{"family", std::string(to_string(family))}, {"n", n}},
                   ctx.closed_form(cf, n),
                   [&ctx, family, n] { return Json(ctx.rna(family_graph(family, n))); }});
  }
  return out;
}

std::vector<Check> petersen_family_checks(const Context& ctx, int k, ClosedFormFamily cf,
                                          const std::vector<int>& ns) {
  std::vector<Check> out;
  for (int n : ns) {
    out.push_back({petersen_params(n, k), ctx.closed_form(cf, n),
                   [&ctx, n, k] { return Json(ctx.rna(generalized_petersen(n, k))); }});
  }
  return out;
}

void add_proof_labeling_check(const Context& ctx, std::vector<Check>& out, ProofLabeling variant,
                              int n, int k, ClosedFormFamily cf) {
  Json params = petersen_params(n, k);
  params["labeling"] = std::string(to_string(variant));
  out.push_back({std::move(params), ctx.closed_form(cf, n), [variant, n, k] {
                   return Json(negative_count(generalized_petersen(n, k), proof_labeling(variant, n)));
                 }});
}

// --- forbidden cuts --------------------------------------------------------

std::vector<Check> no_cut_checks(const Context& ctx, int lo, int hi, ParityFilter n_parity,
                                 int size, CutParity parity) {
  std::vector<Check> out;
  for (auto [n, k] : petersen_pairs(ctx, lo, hi)) {
    if (n_parity == ParityFilter::even && n % 2 != 0) continue;
    if (n_parity == ParityFilter::odd && n % 2 == 0) continue;
    Json params = petersen_params(n, k);
    params["forbidden"] = parity == CutParity::exact ? Json(size)
                          : parity == CutParity::odd ? Json("odd")
                                                     : Json("even");
    out.push_back({std::move(params), true, [&ctx, n, k, size, parity] {
                     return Json(verify_no_cut(generalized_petersen(n, k), size, parity, 1,
                                               ctx.options().max_order));
                   }});
  }
  return out;
}

// --- bounds ----------------------------------------------------------------

std::vector<Check> connectivity_bound_checks(const Context& ctx) {
  std::vector<Check> out;
  for (auto [n, k] : petersen_pairs(ctx, 3, 10)) {
    const Graph g = generalized_petersen(n, k);
    out.push_back({petersen_params(n, k), at_least(edge_connectivity(g)),
                   [&ctx, g] { return Json(ctx.rna(g)); }});
  }
  for (const auto& spec : random_specs(ctx, ctx.random_samples(30), 6, 14, 4100)) {
    const Graph g = spec.make();
    out.push_back({spec.params(), at_least(edge_connectivity(g)),
                   [&ctx, g] { return Json(ctx.rna(g)); }});
  }
  return out;
}

std::vector<Check> petersen_bound_checks(const Context& ctx) {
  std::vector<Check> out;
  for (auto [n, k] : petersen_pairs(ctx, 3, 10)) {
    out.push_back({petersen_params(n, k), between(petersen_lower_bound(n, k), n),
                   [&ctx, n, k] { return Json(ctx.rna(generalized_petersen(n, k))); }});
    Json params = petersen_params(n, k);
    params["labeling"] = "petersen_upper";
    out.push_back({std::move(params), n, [n, k] {
                     return Json(negative_count(generalized_petersen(n, k),
                                                proof_labeling(ProofLabeling::petersen_upper, n)));
                   }});
  }
  return out;
}

// --- famous graphs ---------------------------------------------------------

std::vector<Check> famous_checks(const Context& ctx, FamousGraph which) {
  const FamousGraphRecord rec = famous(which);
  if (!ctx.keep(rec.params.n)) return {};
  Json base = petersen_params(rec.params.n, rec.params.k);
  base["name"] = std::string(to_string(which));
  Json by_label = base;
  by_label["method"] = "labeling";
  Json by_solver = base;
  by_solver["method"] = "solver";
  std::vector<Check> out;
  out.push_back({std::move(by_label), rec.claimed_rna,
                 [rec] { return Json(negative_count(rec.graph(), rec.labeling)); }});
  out.push_back({std::move(by_solver), rec.claimed_rna,
                 [&ctx, rec] { return Json(ctx.rna(rec.graph())); }});
  return out;
}

std::vector<Check> nauru_floor_checks(const Context& ctx) {
  if (!ctx.keep(12)) return {};
  Json params = petersen_params(12, 5);
  params["check"] = "smallest balanced cut";
  return {{std::move(params), at_least(8), [] {
             const auto spectrum = balanced_cut_spectrum(generalized_petersen(12, 5), 1);
             const auto it = std::find_if(spectrum.begin(), spectrum.end(),
                                          [](std::uint64_t c) { return c != 0; });
             return Json(static_cast<int>(it - spectrum.begin()));
           }}};
}

// --- rna one ---------------------------------------------------------------

std::vector<Check> rna_one_checks(const Context& ctx) {
  struct Named {
    Json params;
    Graph graph;
  };
  std::vector<Named> graphs;
  for (int n : ctx.ns(2, 12)) {
    graphs.push_back({{{"family", "path"}, {"n", n}}, family_graph(Family::path, n)});
  }
  if (ctx.keep(4)) {
    graphs.push_back({{{"graph", "K3 plus pendant edge"}, {"order", 4}},
                      make_graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}})});
  }
  if (ctx.keep(10)) {
    graphs.push_back({{{"graph", "fig9"}, {"order", 10}}, fig9_cubic_order10().first});
    graphs.push_back({{{"graph", "reg4nm1"}, {"n", 1}, {"order", 10}}, construct_regular_4nm1(1)});
  }
  if (ctx.keep(14)) {
    graphs.push_back({{{"graph", "reg4np1"}, {"n", 1}, {"order", 14}}, construct_regular_4np1(1)});
  }
  // Sparse samples contain many bridges, denser ones few.
  const int samples = ctx.random_samples(60);
  for (int i = 0; i < samples; ++i) {
    const int order = 4 + i % 9;
    if (!ctx.keep(order)) continue;
    const std::uint64_t seed = 6100 + static_cast<std::uint64_t>(i);
    std::mt19937_64 local(seed);
    const double density = i % 3 == 0 ? 0.0 : 0.05 * (i % 5);
    graphs.push_back({{{"graph", "random"}, {"order", order}, {"seed", seed}},
                      random_connected_graph(order, density, local)});
  }

  // Expected from the bridge criterion, computed by exhaustive search.
  std::vector<Check> out;
  for (auto& [params, g] : graphs) {
    out.push_back({params, rna_one_check(g).has_value(),
                   [&ctx, g = g] { return Json(ctx.rna(g) == 1); }});
  }
  return out;
}

std::vector<Check> regular_construction_checks(const Context& ctx, bool minus) {
  std::vector<Check> out;
  for (int n : ctx.ns(1, 3)) {
    const int degree = minus ? 4 * n - 1 : 4 * n + 1;
    const int order = minus ? 12 * n - 2 : 8 * n + 6;
    auto build = [minus, n] { return minus ? construct_regular_4nm1(n) : construct_regular_4np1(n); };
    Json base{{"graph", minus ? "reg4nm1" : "reg4np1"}, {"n", n}};
    Json p_order = base;
    p_order["check"] = "order";
    Json p_degree = base;
    p_degree["check"] = "regular degree";
    Json p_one = base;
    p_one["check"] = "balanced bridge";
    out.push_back({std::move(p_order), order, [build] { return Json(build().order()); }});
    out.push_back({std::move(p_degree), degree, [build] {
                     const Graph g = build();
                     return Json(g.min_degree() == g.max_degree() ? g.min_degree() : -1);
                   }});
    out.push_back({std::move(p_one), true, [build] {
                     const Graph g = build();
                     return Json(is_connected(g) && rna_one_check(g).has_value());
                   }});
  }
  return out;
}

// --- cubic census ----------------------------------------------------------

std::vector<Check> census_checks(const Context& ctx, int order, int classes, bool expect_one) {
  if (!ctx.keep(order)) return {};
  std::vector<Check> out;
  out.push_back({{{"order", order}, {"check", "isomorphism classes"}}, classes,
                 [order] { return Json(enumerate_cubic(order).size()); }});
  auto count_one = [order] {
    int count = 0;
    for (const Graph& g : enumerate_cubic(order)) count += rna_one_check(g).has_value() ? 1 : 0;
    return Json(count);
  };
  out.push_back({{{"order", order}, {"check", "classes with a balanced bridge"}},
                 expect_one ? at_least(1) : Json(0), count_one});
  return out;
}

std::vector<Check> fig9_checks(const Context& ctx) {
  std::vector<Check> out = census_checks(ctx, 10, 19, true);
  if (!ctx.keep(10)) return out;
  const auto [g, f] = fig9_cubic_order10();
  auto param = [](std::string_view what) { return Json{{"graph", "fig9"}, {"check", what}}; };
  out.push_back({param("cubic"), true, [g = g] { return Json(g.order() == 10 && g.is_regular(3)); }});
  out.push_back({param("negative edges"), 1, [g = g, f = f] { return Json(negative_count(g, f)); }});
  out.push_back({param("bridge sides"), Json::array({5, 5}), [g = g] {
                   Json sides = Json::array();
                   for (const Edge& e : bridges(g)) {
                     const int side = popcount(component_of(g, e.u, g.vertices() & ~bit(e.v)));
                     sides.push_back(side);
                     sides.push_back(g.order() - side);
                   }
                   return sides;
                 }});
  out.push_back({param("rna"), 1, [&ctx, g = g] { return Json(ctx.rna(g)); }});
  return out;
}

std::vector<Check> cubic_minimum_checks(const Context& ctx) {
  std::vector<Check> out;
  out.push_back({{{"check", "smallest cubic order with rna 1"}}, 10, [] {
                   for (int order = 4; order <= 10; order += 2) {
                     for (const Graph& g : enumerate_cubic(order)) {
                       if (rna_one_check(g)) return Json(order);
                     }
                   }
                   return Json(nullptr);
                 }});
  if (ctx.keep(1)) {
    out.push_back({{{"graph", "reg4nm1"}, {"n", 1}, {"check", "order and rna"}},
                   Json::array({10, 1}), [&ctx] {
                     const Graph g = construct_regular_4nm1(1);
                     return Json::array({g.order(), ctx.rna(g)});
                   }});
  }
  return out;
}

std::vector<Check> quintic_minimum_checks(const Context& ctx) {
  std::vector<Check> out = regular_construction_checks(ctx, false);
  // A 5-regular graph of order 2m with a balanced bridge has two sides of
  // order m, each with degrees (4, 5, ..., 5); none exists for m < 7.
  if (ctx.keep(1)) {
    out.push_back({{{"degree", 5}, {"check", "smallest order with a balanced bridge"}}, 14, [] {
                     for (int side = 1; side <= 12; ++side) {
                       if (bridge_side_exists(side, 5)) return Json(2 * side);
                     }
                     return Json(nullptr);
                   }});
  }
  return out;
}

// --- algorithm -------------------------------------------------------------

std::vector<Check> counter_checks(const Context& ctx) {
  std::vector<Check> out;
  SolverOptions full;
  full.early_exit = false;
  full.max_order = ctx.options().max_order;
  auto add = [&](Json params, const Graph& g) {
    const int n = g.order();
    const std::uint64_t fast_expected =
        n % 2 == 0 ? binomial(n - 1, n / 2 - 1) : binomial(n, n / 2);
    Json pf = params;
    pf["solver"] = "fast";
    out.push_back({std::move(pf), fast_expected,
                   [g, full] { return Json(rna_fast(g, full).stats.subsets_examined); }});
    params["solver"] = "naive";
    out.push_back({std::move(params), binomial(n, n / 2),
                   [g, full] { return Json(rna_naive(g, full).stats.subsets_examined); }});
  };
  for (int n : ctx.ns(3, 10)) add(petersen_params(n, 1), generalized_petersen(n, 1));
  for (int n : ctx.ns(5, 15)) {
    if (n % 2 == 1) add({{"family", "path"}, {"n", n}}, family_graph(Family::path, n));
  }
  return out;
}

std::vector<Check> agreement_checks(const Context& ctx) {
  std::vector<Check> out;
  for (const auto& spec : random_specs(ctx, ctx.random_samples(30), 6, 14, 7100)) {
    const Graph g = spec.make();
    const int reference = rna_naive(g).value;
    for (SolverKind kind : {SolverKind::fast, SolverKind::branch_bound}) {
      Json params = spec.params();
      params["solver"] = std::string(to_string(kind));
      out.push_back({params, reference, [g, kind] { return Json(solve(kind, g).value); }});
      params["check"] = "witness cut";
      out.push_back({std::move(params), reference, [g, kind] {
                       return Json(cut_of(g, solve(kind, g).witness_side).size());
                     }});
    }
  }
  return out;
}

// --- registry --------------------------------------------------------------

struct Entry {
  std::string_view id;
  std::string_view description;
  std::function<std::vector<Check>(const Context&)> build;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"thm2.1", "paths have rna 1",
       [](const Context& c) { return family_checks(c, Family::path, ClosedFormFamily::path, 2, 12); }},
      {"thm2.2", "cycles have rna 2",
       [](const Context& c) { return family_checks(c, Family::cycle, ClosedFormFamily::cycle, 3, 12); }},
      {"thm2.3", "stars K_{1,n} have rna ceil(n/2)",
       [](const Context& c) { return family_checks(c, Family::star, ClosedFormFamily::star, 1, 11); }},
      {"thm2.4", "wheels on n vertices",
       [](const Context& c) { return family_checks(c, Family::wheel, ClosedFormFamily::wheel, 4, 12); }},
      {"thm2.5", "complete graphs have rna ceil(n/2)floor(n/2)",
       [](const Context& c) {
         return family_checks(c, Family::complete, ClosedFormFamily::complete, 2, 12);
       }},
      {"lem3.2", "P(n,k) has no balanced cut of size 3",
       [](const Context& c) { return no_cut_checks(c, 4, 10, ParityFilter::any, 3, CutParity::exact); }},
      {"lem3.3", "P(n,k), n even, has no odd balanced cut",
       [](const Context& c) { return no_cut_checks(c, 4, 10, ParityFilter::even, 0, CutParity::odd); }},
      {"lem3.4", "P(n,k), n odd, has no even balanced cut",
       [](const Context& c) { return no_cut_checks(c, 3, 9, ParityFilter::odd, 0, CutParity::even); }},
      {"thm4.1", "rna is at least the edge connectivity", connectivity_bound_checks},
      {"thm4.2", "P(n,k) bounds and the all-spokes labeling", petersen_bound_checks},
      {"lem4.3", "P(3,1) has rna 3",
       [](const Context& c) {
         auto out = petersen_family_checks(c, 1, ClosedFormFamily::petersen_k1, c.ns(3, 3));
         if (c.keep(3)) {
           add_proof_labeling_check(c, out, ProofLabeling::petersen_upper, 3, 1,
                                    ClosedFormFamily::petersen_k1);
         }
         return out;
       }},
      {"thm4.4", "P(n,1) has rna 4 (n even) or 5 (n odd)",
       [](const Context& c) {
         const auto ns = c.ns(3, 12);
         auto out = petersen_family_checks(c, 1, ClosedFormFamily::petersen_k1, ns);
         for (int n : ns) {
           if (n < 4) continue;
           add_proof_labeling_check(
               c, out, n % 2 == 0 ? ProofLabeling::petersen_k1_even : ProofLabeling::petersen_k1_odd,
               n, 1, ClosedFormFamily::petersen_k1);
         }
         return out;
       }},
      {"thm4.5", "P(n,2), n odd >= 7, has rna 7",
       [](const Context& c) {
         std::vector<int> ns;
         for (int n : c.ns(7, 11)) {
           if (n % 2 == 1) ns.push_back(n);
         }
         auto out = petersen_family_checks(c, 2, ClosedFormFamily::petersen_k2, ns);
         for (int n : ns) {
           add_proof_labeling_check(c, out, ProofLabeling::petersen_k2_odd, n, 2,
                                    ClosedFormFamily::petersen_k2);
         }
         return out;
       }},
      {"thm4.6", "P(n,2), n even >= 8, has rna 6",
       [](const Context& c) {
         std::vector<int> ns;
         for (int n : c.ns(8, 12)) {
           if (n % 2 == 0) ns.push_back(n);
         }
         auto out = petersen_family_checks(c, 2, ClosedFormFamily::petersen_k2, ns);
         for (int n : ns) {
           add_proof_labeling_check(c, out, ProofLabeling::petersen_k2_even, n, 2,
                                    ClosedFormFamily::petersen_k2);
         }
         return out;
       }},
      {"ex5.1", "Petersen graph", [](const Context& c) { return famous_checks(c, FamousGraph::petersen); }},
      {"ex5.2", "Durer graph", [](const Context& c) { return famous_checks(c, FamousGraph::durer); }},
      {"ex5.3", "Mobius-Kantor graph",
       [](const Context& c) { return famous_checks(c, FamousGraph::mobius_kantor); }},
      {"ex5.4", "dodecahedron",
       [](const Context& c) { return famous_checks(c, FamousGraph::dodecahedron); }},
      {"ex5.5", "Desargues graph",
       [](const Context& c) { return famous_checks(c, FamousGraph::desargues); }},
      {"ex5.6", "Nauru graph", [](const Context& c) { return famous_checks(c, FamousGraph::nauru); }},
      {"lem5.7", "Nauru graph has no balanced cut below 8", nauru_floor_checks},
      {"thm6.1", "rna 1 iff a bridge splits the graph into near-equal halves", rna_one_checks},
      {"lem6.2", "(4n-1)-regular graphs on 12n-2 vertices with a balanced bridge",
       [](const Context& c) { return regular_construction_checks(c, true); }},
      {"lem6.3", "no cubic graph of order 4 has rna 1",
       [](const Context& c) { return census_checks(c, 4, 1, false); }},
      {"lem6.4", "no cubic graph of order 6 has rna 1",
       [](const Context& c) { return census_checks(c, 6, 2, false); }},
      {"lem6.5", "no cubic graph of order 8 has rna 1",
       [](const Context& c) { return census_checks(c, 8, 5, false); }},
      {"lem6.6", "a cubic graph of order 10 has rna 1", fig9_checks},
      {"thm6.6", "smallest cubic graph with rna 1 has order 10", cubic_minimum_checks},
      {"lem6.7", "(4n+1)-regular graphs on 8n+6 vertices with a balanced bridge",
       [](const Context& c) { return regular_construction_checks(c, false); }},
      {"thm6.8", "smallest 5-regular graph with rna 1 has order 14", quintic_minimum_checks},
      {"lem7.1", "all solvers agree with exhaustive enumeration", agreement_checks},
      {"thm7.2", "subsets examined by the enumerations", counter_checks},
  };
  return entries;
}

std::string_view resolve_alias(std::string_view id) {
  if (id == "lem6.8") return "thm6.8";
  return id;
}

const Entry* find_entry(std::string_view id) {
  id = resolve_alias(id);
  for (const Entry& e : registry()) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

VerificationReport run_entry(const Entry& entry, const VerifyOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const Context ctx(options);
  VerificationReport report;
  report.theorem = std::string(entry.id);
  report.description = std::string(entry.description);

  std::vector<Check> checks = entry.build(ctx);
  report.instances.resize(checks.size());
  const auto count = static_cast<std::int64_t>(checks.size());
  const int jobs = std::max(1, options.jobs);
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs) if (jobs > 1)
  for (std::int64_t i = 0; i < count; ++i) {
    Check& check = checks[static_cast<std::size_t>(i)];
    InstanceResult& r = report.instances[static_cast<std::size_t>(i)];
    r.params = check.params;
    r.expected = check.expected;
    try {
      r.computed = check.compute();
      r.pass = meets_expectation(r.expected, r.computed);
    } catch (const std::exception& e) {
      r.computed = Json{{"error", e.what()}};
      r.pass = false;
    }
  }
  report.pass = std::all_of(report.instances.begin(), report.instances.end(),
                            [](const InstanceResult& r) { return r.pass; });
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - started);
  return report;
}

}  // namespace

std::vector<std::string_view> theorem_ids() {
  std::vector<std::string_view> ids;
  for (const Entry& e : registry()) ids.push_back(e.id);
  return ids;
}

bool is_theorem_id(std::string_view id) { return find_entry(id) != nullptr; }

VerificationReport run_verification(std::string_view id, const VerifyOptions& options) {
  const Entry* entry = find_entry(id);
  if (entry == nullptr) throw validation_error("unknown theorem id '" + std::string(id) + "'");
  return run_entry(*entry, options);
}

std::vector<VerificationReport> run_all(const VerifyOptions& options) {
  std::vector<VerificationReport> reports;
  for (const Entry& e : registry()) reports.push_back(run_entry(e, options));
  return reports;
}

Json report_to_json(const VerificationReport& report) {
  Json instances = Json::array();
  for (const InstanceResult& r : report.instances) {
    instances.push_back({{"params", r.params}, {"expected", r.expected}, {"computed", r.computed}});
  }
  Json doc;
  doc["theorem"] = report.theorem;
  doc["instances"] = std::move(instances);
  doc["status"] = report.pass ? "pass" : "fail";
  return doc;
}

}  // namespace rna
