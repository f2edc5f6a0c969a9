#pragma once

#include <optional>
#include <string_view>

#include "rna/signing.hpp"

namespace rna {

enum class ClosedFormFamily { path, cycle, star, wheel, complete, petersen_k1, petersen_k2 };

std::optional<ClosedFormFamily> parse_closed_form_family(std::string_view name);
std::string_view to_string(ClosedFormFamily f);

// Known exact rna numbers, indexed like family_graph / generalized_petersen:
//   path P_n (n >= 2)              1
//   cycle C_n (n >= 3)             2
//   star K_{1,n} (n >= 1 leaves)   ceil(n/2)
//   wheel on n vertices (n >= 4)   ceil((r+4)/2) with r = n-1 rim vertices
//   complete K_n (n >= 2)          ceil(n/2) * floor(n/2)
//   P(n,1) (n >= 3)                3 for n = 3, else 4 (n even) / 5 (n odd)
//   P(n,2) (n >= 7)                6 (n even, n >= 8) / 7 (n odd)
// Throws validation_error outside those ranges.
int closed_form_rna(ClosedFormFamily family, int n);

// Best lower bound on sigma^-(P(n,k)) that follows from the edge
// connectivity, the forbidden balanced cuts of size 3, the parity of balanced
// cuts in a cubic graph and the gcd(n,k) = 1 bounds.
int petersen_lower_bound(int n, int k);

enum class ProofLabeling {
  petersen_upper,    // f(u_i) = 2i+1, f(v_i) = 2i+2: every spoke negative
  petersen_k1_even,  // P(2l,1), l >= 2: four negative edges
  petersen_k1_odd,   // P(2l+1,1), l >= 2: five
  petersen_k2_even,  // P(2l,2), l >= 4: six
  petersen_k2_odd,   // P(2l+1,2), l >= 3: seven
};

std::optional<ProofLabeling> parse_proof_labeling(std::string_view name);
std::string_view to_string(ProofLabeling p);

// The explicit labeling of P(n, .) used to attain the upper bound, under the
// u_i -> i, v_i -> n+i index convention. Throws validation_error when n is
// outside the variant's range or has the wrong parity.
ParityLabeling proof_labeling(ProofLabeling variant, int n);

}  // namespace rna
