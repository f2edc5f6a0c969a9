#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rna/closed_forms.hpp"
#include "rna/io.hpp"
#include "rna/solver.hpp"

namespace rna {

// A connected graph: a uniform random recursive tree plus each remaining pair
// with probability `density`.
Graph random_connected_graph(int order, double density, std::mt19937_64& rng);

// A uniformly random bijection onto 1..order.
ParityLabeling random_labeling(int order, std::mt19937_64& rng);

enum class ParityFilter { any, even, odd };

struct VerifyOptions {
  // Restricts the instance parameter (n, or the order for census checks).
  std::optional<std::pair<int, int>> n_range;
  ParityFilter parity = ParityFilter::any;
  // Smaller random samples.
  bool quick = false;
  // Instances evaluated concurrently (OpenMP).
  int jobs = 1;
  SolverKind solver = SolverKind::fast;
  std::optional<int> max_order;
  // Source of the expected closed-form values; replaceable for mutation tests.
  std::function<int(ClosedFormFamily, int)> closed_form = closed_form_rna;
};

// `expected` is either a value compared for equality with `computed`, or an
// object {"min": a, "max": b} (either bound optional) that `computed` must
// fall into.
struct InstanceResult {
  Json params;
  Json expected;
  Json computed;
  bool pass = false;
};

struct VerificationReport {
  std::string theorem;
  std::string description;
  std::vector<InstanceResult> instances;
  bool pass = false;
  std::chrono::nanoseconds elapsed{0};
};

bool meets_expectation(const Json& expected, const Json& computed);

// Known ids, in suite order.
std::vector<std::string_view> theorem_ids();
bool is_theorem_id(std::string_view id);

// Throws validation_error for an unknown id.
VerificationReport run_verification(std::string_view id, const VerifyOptions& options = {});
std::vector<VerificationReport> run_all(const VerifyOptions& options = {});

// {"theorem", "instances": [{"params", "expected", "computed"}], "status"}.
Json report_to_json(const VerificationReport& report);

}  // namespace rna
