#include "rna/closed_forms.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace rna {

std::optional<ClosedFormFamily> parse_closed_form_family(std::string_view name) {
  if (name == "path") return ClosedFormFamily::path;
  if (name == "cycle") return ClosedFormFamily::cycle;
  if (name == "star") return ClosedFormFamily::star;
  if (name == "wheel") return ClosedFormFamily::wheel;
  if (name == "complete") return ClosedFormFamily::complete;
  if (name == "petersen_k1") return ClosedFormFamily::petersen_k1;
  if (name == "petersen_k2") return ClosedFormFamily::petersen_k2;
  return std::nullopt;
}

std::string_view to_string(ClosedFormFamily f) {
  switch (f) {
    case ClosedFormFamily::path: return "path";
    case ClosedFormFamily::cycle: return "cycle";
    case ClosedFormFamily::star: return "star";
    case ClosedFormFamily::wheel: return "wheel";
    case ClosedFormFamily::complete: return "complete";
    case ClosedFormFamily::petersen_k1: return "petersen_k1";
    case ClosedFormFamily::petersen_k2: return "petersen_k2";
  }
  return "?";
}

namespace {

int ceil_half(int x) { return (x + 1) / 2; }

[[noreturn]] void out_of_range(std::string_view what, int n, std::string_view range) {
  throw validation_error(std::string(what) + " closed form holds for " + std::string(range) +
                         ", got n=" + std::to_string(n));
}

}  // namespace

int closed_form_rna(ClosedFormFamily family, int n) {
  switch (family) {
    case ClosedFormFamily::path:
      if (n < 2) out_of_range("path", n, "n >= 2");
      return 1;
    case ClosedFormFamily::cycle:
      if (n < 3) out_of_range("cycle", n, "n >= 3");
      return 2;
    case ClosedFormFamily::star:
      if (n < 1) out_of_range("star", n, "n >= 1");
      return ceil_half(n);
    case ClosedFormFamily::wheel: {
      if (n < 4) out_of_range("wheel", n, "n >= 4");
      const int rim = n - 1;
      return ceil_half(rim + 4);
    }
    case ClosedFormFamily::complete:
      if (n < 2) out_of_range("complete", n, "n >= 2");
      return ceil_half(n) * (n / 2);
    case ClosedFormFamily::petersen_k1:
      if (n < 3) out_of_range("petersen_k1", n, "n >= 3");
      if (n == 3) return 3;
      return n % 2 == 0 ? 4 : 5;
    case ClosedFormFamily::petersen_k2:
      if (n % 2 == 0 && n < 8) out_of_range("petersen_k2", n, "even n >= 8");
      if (n % 2 == 1 && n < 7) out_of_range("petersen_k2", n, "odd n >= 7");
      return n % 2 == 0 ? 6 : 7;
  }
  throw validation_error("unknown closed-form family");
}

int petersen_lower_bound(int n, int k) {
  if (n < 3 || k < 1 || 2 * k >= n) {
    throw validation_error("P(n,k) needs n >= 3, k >= 1 and 2k < n");
  }
  int bound = 3;  // edge connectivity
  if (n >= 4) bound = 4;  // no balanced 3-cut
  if (n >= 5 && k >= 2 && std::gcd(n, k) == 1) bound = std::max(bound, 5);
  if (n >= 8 && n % 2 == 0 && k >= 3 && std::gcd(n, k) == 1) bound = std::max(bound, 6);
  // Balanced cuts of a cubic graph on 2n vertices have the parity of n.
  if (n >= 4 && bound % 2 != n % 2) ++bound;
  return bound;
}

std::optional<ProofLabeling> parse_proof_labeling(std::string_view name) {
  if (name == "petersen_upper") return ProofLabeling::petersen_upper;
  if (name == "petersen_k1_even") return ProofLabeling::petersen_k1_even;
  if (name == "petersen_k1_odd") return ProofLabeling::petersen_k1_odd;
  if (name == "petersen_k2_even") return ProofLabeling::petersen_k2_even;
  if (name == "petersen_k2_odd") return ProofLabeling::petersen_k2_odd;
  return std::nullopt;
}

std::string_view to_string(ProofLabeling p) {
  switch (p) {
    case ProofLabeling::petersen_upper: return "petersen_upper";
    case ProofLabeling::petersen_k1_even: return "petersen_k1_even";
    case ProofLabeling::petersen_k1_odd: return "petersen_k1_odd";
    case ProofLabeling::petersen_k2_even: return "petersen_k2_even";
    case ProofLabeling::petersen_k2_odd: return "petersen_k2_odd";
  }
  return "?";
}

namespace {

ParityLabeling from_formulas(int n, const std::function<int(int)>& u,
                             const std::function<int(int)>& v) {
  std::vector<int> labels(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    labels[static_cast<std::size_t>(i)] = u(i);
    labels[static_cast<std::size_t>(n + i)] = v(i);
  }
  return ParityLabeling(std::move(labels));
}

void require_range(ProofLabeling p, int n, bool ok, std::string_view range) {
  if (!ok) {
    throw validation_error(std::string(to_string(p)) + " needs " + std::string(range) +
                           ", got n=" + std::to_string(n));
  }
}

}  // namespace

ParityLabeling proof_labeling(ProofLabeling variant, int n) {
  switch (variant) {
    case ProofLabeling::petersen_upper:
      require_range(variant, n, n >= 3 && n <= 32, "3 <= n <= 32");
      return from_formulas(n, [](int i) { return 2 * i + 1; }, [](int i) { return 2 * i + 2; });

    case ProofLabeling::petersen_k1_even: {
      require_range(variant, n, n >= 4 && n % 2 == 0 && n <= 32, "even n >= 4");
      const int l = n / 2;
      return from_formulas(
          n, [l](int i) { return i <= l - 1 ? 2 * i + 2 : 2 * i - 2 * l + 1; },
          [l](int i) { return i <= l - 1 ? 2 * i + 2 * l + 2 : 2 * i + 1; });
    }

    case ProofLabeling::petersen_k1_odd: {
      require_range(variant, n, n >= 5 && n % 2 == 1 && n <= 31, "odd n >= 5");
      const int l = n / 2;
      return from_formulas(
          n, [l](int i) { return i <= l ? 2 * i + 1 : 2 * i - 2 * l; },
          [l](int i) { return i <= l - 1 ? 2 * i + (2 * l + 3) : 2 * i + 2; });
    }

    case ProofLabeling::petersen_k2_even: {
      require_range(variant, n, n >= 8 && n % 2 == 0 && n <= 32, "even n >= 8");
      const int l = n / 2;
      return from_formulas(
          n, [l](int i) { return i <= l - 1 ? 2 * i + 1 : 2 * i - (2 * l - 2); },
          [l](int i) { return i <= l - 1 ? 2 * l + (2 * i + 1) : 2 * i + 2; });
    }

    case ProofLabeling::petersen_k2_odd: {
      require_range(variant, n, n >= 7 && n % 2 == 1 && n <= 31, "odd n >= 7");
      const int l = n / 2;
      return from_formulas(
          n, [l](int i) { return i <= l ? 2 * i + 1 : 2 * i - 2 * l; },
          [l](int i) {
            if (i == 0) return 4 * l + 2;
            return i <= l ? 2 * l + (2 * i + 1) : 2 * i;
          });
    }
  }
  throw validation_error("unknown proof labeling");
}

}  // namespace rna
