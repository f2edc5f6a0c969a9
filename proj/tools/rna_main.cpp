// rna: compute rna numbers, run the verification suite, export graphs.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rna/closed_forms.hpp"
#include "rna/graph_spec.hpp"
#include "rna/io.hpp"
#include "rna/verify.hpp"

namespace {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kCapacity = 3, kIo = 4 };

struct GraphFlags {
  std::string petersen, family, famous, construct, edges, json_file;

  void attach(CLI::App& app) {
    auto* group = app.add_option_group("graph", "graph to work on (exactly one)");
    group->add_option("--petersen", petersen, "generalized Petersen graph P(n,k) as n,k");
    group->add_option("--family", family, "path|cycle|star|wheel|complete as name:n");
    group->add_option("--famous", famous,
                      "petersen|durer|mobius-kantor|dodecahedron|desargues|nauru");
    group->add_option("--construct", construct, "gr:n|gs:n|reg4nm1:n|reg4np1:n|fig9");
    group->add_option("--edges", edges, "edge list \"a-b,c-d,...\"");
    group->add_option("--json-file", json_file, "graph JSON {\"order\", \"edges\"}");
    group->require_option(1);
  }

  rna::GraphSource load() const {
    using rna::SpecKind;
    if (!petersen.empty()) return rna::load_graph(SpecKind::petersen, petersen);
    if (!family.empty()) return rna::load_graph(SpecKind::family, family);
    if (!famous.empty()) return rna::load_graph(SpecKind::famous, famous);
    if (!construct.empty()) return rna::load_graph(SpecKind::construct, construct);
    if (!edges.empty()) return rna::load_graph(SpecKind::edges, edges);
    return rna::load_graph(SpecKind::json_file, json_file);
  }
};

std::string join(std::span<const int> xs) {
  std::string out;
  for (int x : xs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

rna::SolverKind solver_from(const std::string& name) {
  const auto kind = rna::parse_solver(name);
  if (!kind) throw rna::validation_error("unknown solver '" + name + "' (naive, fast, bb)");
  return *kind;
}

// --- rna -----------------------------------------------------------------

struct RnaCommand {
  GraphFlags graph;
  std::string solver = "fast";
  std::optional<int> max_order;
  std::string format = "text";
  bool json = false;
  int threads = 1;
  bool no_early_exit = false;

  int run() const {
    const rna::GraphSource src = graph.load();
    rna::SolverOptions options;
    options.max_order = max_order;
    options.threads = threads;
    options.early_exit = !no_early_exit;
    const rna::RnaResult r = rna::solve(solver_from(solver), src.graph, options);

    if (json || format == "json") {
      std::cout << rna::result_to_json(r).dump() << '\n';
      return kOk;
    }
    const std::vector<int> side = rna::vertices_of(r.witness_side);
    std::cout << "graph:            " << src.description << " (order " << src.graph.order()
              << ", size " << src.graph.size() << ")\n"
              << "rna:              " << r.value << '\n'
              << "solver:           " << rna::to_string(r.solver) << '\n'
              << "witness side:     " << join(side) << '\n'
              << "witness labels:   " << join(r.witness_labeling.labels()) << '\n'
              << "subsets examined: " << r.stats.subsets_examined
              << (r.stats.stopped_early ? " (stopped at the connectivity bound)" : "") << '\n'
              << "elapsed:          "
              << std::chrono::duration<double, std::milli>(r.stats.elapsed).count() << " ms\n";
    return kOk;
  }
};

// --- verify --------------------------------------------------------------

struct VerifyCommand {
  std::string id;
  std::string range;
  bool even = false;
  bool odd = false;
  bool quick = false;
  int jobs = 1;
  std::string solver = "fast";
  std::optional<int> max_order;
  std::string format = "text";
  bool json = false;
  std::string perturb;

  rna::VerifyOptions options() const {
    rna::VerifyOptions o;
    if (!range.empty()) o.n_range = rna::parse_range(range);
    if (even && odd) throw rna::validation_error("--even and --odd are exclusive");
    if (even) o.parity = rna::ParityFilter::even;
    if (odd) o.parity = rna::ParityFilter::odd;
    o.quick = quick;
    o.jobs = jobs;
    o.solver = solver_from(solver);
    o.max_order = max_order;
    if (!perturb.empty()) {
      const auto colon = perturb.find(':');
      const auto family =
          rna::parse_closed_form_family(std::string_view(perturb).substr(0, colon));
      if (!family || colon == std::string::npos) {
        throw rna::validation_error("--perturb expects family:n");
      }
      const int n = rna::parse_int(std::string_view(perturb).substr(colon + 1), "--perturb n");
      o.closed_form = [f = *family, n](rna::ClosedFormFamily fam, int m) {
        return rna::closed_form_rna(fam, m) + (fam == f && m == n ? 1 : 0);
      };
    }
    return o;
  }

  static void print_text(const rna::VerificationReport& r) {
    std::size_t passed = 0;
    for (const auto& i : r.instances) passed += i.pass ? 1 : 0;
    std::printf("%-8s %s  %zu/%zu  %s  (%.1f ms)\n", r.theorem.c_str(), r.pass ? "PASS" : "FAIL",
                passed, r.instances.size(), r.description.c_str(),
                std::chrono::duration<double, std::milli>(r.elapsed).count());
    for (const auto& i : r.instances) {
      if (i.pass) continue;
      std::printf("    params %s expected %s computed %s\n", i.params.dump().c_str(),
                  i.expected.dump().c_str(), i.computed.dump().c_str());
    }
  }

  int run() const {
    const rna::VerifyOptions o = options();
    std::vector<rna::VerificationReport> reports;
    if (id == "all") {
      reports = rna::run_all(o);
    } else {
      if (!rna::is_theorem_id(id)) {
        std::string known;
        for (auto k : rna::theorem_ids()) known += " " + std::string(k);
        throw rna::validation_error("unknown theorem id '" + id + "'; known: all" + known);
      }
      reports.push_back(rna::run_verification(id, o));
    }
    const bool pass = std::all_of(reports.begin(), reports.end(),
                                  [](const rna::VerificationReport& r) { return r.pass; });

    if (json || format == "json") {
      if (id == "all") {
        rna::Json doc;
        doc["status"] = pass ? "pass" : "fail";
        doc["reports"] = rna::Json::array();
        for (const auto& r : reports) doc["reports"].push_back(rna::report_to_json(r));
        std::cout << doc.dump() << '\n';
      } else {
        std::cout << rna::report_to_json(reports.front()).dump() << '\n';
      }
    } else {
      for (const auto& r : reports) print_text(r);
      if (id == "all") std::cout << (pass ? "all checks passed\n" : "some checks FAILED\n");
    }
    return pass ? kOk : kVerifyFailed;
  }
};

// --- export --------------------------------------------------------------

struct ExportCommand {
  GraphFlags graph;
  std::string labeling = "none";
  std::string format = "dot";
  std::string out;

  std::optional<rna::ParityLabeling> pick_labeling(const rna::GraphSource& src) const {
    if (labeling == "none") return std::nullopt;
    if (labeling == "builtin" || labeling == "famous") {
      if (!src.builtin_labeling) {
        throw rna::validation_error("this graph has no built-in labeling");
      }
      return src.builtin_labeling;
    }
    if (labeling == "witness") return rna::rna_fast(src.graph).witness_labeling;
    if (labeling == "upper" || labeling.starts_with("proof:")) {
      if (!src.petersen) throw rna::validation_error("proof labelings need a --petersen graph");
      rna::ProofLabeling variant = rna::ProofLabeling::petersen_upper;
      if (labeling != "upper") {
        const auto parsed = rna::parse_proof_labeling(std::string_view(labeling).substr(6));
        if (!parsed) throw rna::validation_error("unknown proof labeling '" + labeling + "'");
        variant = *parsed;
      }
      return rna::proof_labeling(variant, src.petersen->n);
    }
    const std::string path = labeling.starts_with("file:") ? labeling.substr(5) : labeling;
    std::ifstream in(path);
    if (!in) throw rna::io_error("cannot read labeling file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    rna::Json doc = rna::Json::parse(buf.str(), nullptr, false);
    if (doc.is_discarded()) throw rna::validation_error(path + ": invalid JSON");
    rna::ParityLabeling f = rna::labeling_from_json(doc);
    if (f.order() != src.graph.order()) {
      throw rna::validation_error("labeling order does not match the graph");
    }
    return f;
  }

  int run() const {
    const rna::GraphSource src = graph.load();
    const auto f = pick_labeling(src);

    std::string text;
    if (format == "dot") {
      rna::DotOptions options;
      options.petersen = src.petersen;
      options.labeling = f;
      text = rna::to_dot(src.graph, options);
    } else if (format == "json") {
      rna::Json doc = rna::graph_to_json(src.graph);
      if (f) doc["labels"] = rna::labeling_to_json(*f)["labels"];
      text = doc.dump() + "\n";
    } else {
      throw rna::validation_error("unknown export format '" + format + "' (dot, json)");
    }

    if (out.empty() || out == "-") {
      std::cout << text;
      return kOk;
    }
    std::ofstream file(out);
    if (!file || !(file << text) || !file.flush()) throw rna::io_error("cannot write " + out);
    return kOk;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rna numbers of parity signed graphs"};
  app.require_subcommand(1);

  RnaCommand rna_cmd;
  auto* rna_app = app.add_subcommand("rna", "compute the rna number of a graph");
  rna_cmd.graph.attach(*rna_app);
  rna_app->add_option("--solver", rna_cmd.solver, "naive|fast|bb")->capture_default_str();
  rna_app->add_option("--max-order", rna_cmd.max_order, "override the solver's order guard")
      ->envname("RNA_MAX_ORDER");
  rna_app->add_option("--format", rna_cmd.format, "text|json")->capture_default_str();
  rna_app->add_flag("--json", rna_cmd.json, "same as --format json");
  rna_app->add_option("--threads", rna_cmd.threads, "threads for the fast solver")
      ->check(CLI::PositiveNumber);
  rna_app->add_flag("--no-early-exit", rna_cmd.no_early_exit,
                    "enumerate everything even after reaching the connectivity bound");

  VerifyCommand verify_cmd;
  auto* verify_app = app.add_subcommand("verify", "check a theorem's values (or 'all')");
  verify_app->add_option("id", verify_cmd.id, "theorem id, e.g. thm4.4, or all")->required();
  verify_app->add_option("--n", verify_cmd.range, "parameter range a..b");
  verify_app->add_flag("--even", verify_cmd.even, "even parameters only");
  verify_app->add_flag("--odd", verify_cmd.odd, "odd parameters only");
  verify_app->add_flag("--quick", verify_cmd.quick, "smaller random samples");
  verify_app->add_option("--jobs", verify_cmd.jobs, "instances checked in parallel")
      ->check(CLI::PositiveNumber);
  verify_app->add_option("--solver", verify_cmd.solver, "naive|fast|bb")->capture_default_str();
  verify_app->add_option("--max-order", verify_cmd.max_order, "override order guards")
      ->envname("RNA_MAX_ORDER");
  verify_app->add_option("--format", verify_cmd.format, "text|json")->capture_default_str();
  verify_app->add_flag("--json", verify_cmd.json, "same as --format json");
  verify_app->add_option("--perturb", verify_cmd.perturb,
                         "add 1 to one expected closed form, as family:n (mutation testing)")
      ->group("");

  ExportCommand export_cmd;
  auto* export_app = app.add_subcommand("export", "write a graph as DOT or JSON");
  export_cmd.graph.attach(*export_app);
  export_app->add_option("--labeling", export_cmd.labeling,
                         "none|builtin|witness|upper|proof:<variant>|<labels.json>")
      ->capture_default_str();
  export_app->add_option("--format", export_cmd.format, "dot|json")->capture_default_str();
  export_app->add_option("--out,-o", export_cmd.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (rna_app->parsed()) return rna_cmd.run();
    if (verify_app->parsed()) return verify_cmd.run();
    return export_cmd.run();
  } catch (const rna::capacity_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const rna::io_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
