#pragma once

#include <array>
#include <cstdint>

#include "rna/graph.hpp"

namespace rna {

// C(n, k) for 0 <= n <= 64; 0 when k is out of range.
std::uint64_t binomial(int n, int k);

// t-subsets of {0..n-1} in revolving-door order (Knuth's Algorithm R):
// consecutive subsets differ by exactly one element leaving and one entering.
// The order is Gamma(n,t) = Gamma(n-1,t), reverse(Gamma(n-1,t-1)) + {n-1}.
class RevolvingDoor {
 public:
  // Starts at the subset of rank `rank` (rank 0 is {0..t-1}).
  RevolvingDoor(int n, int t, std::uint64_t rank = 0);

  VertexMask current() const noexcept { return mask_; }

  // Steps to the next subset. Returns false, leaving the state untouched,
  // when the current subset is the last one.
  bool next(int& removed, int& added) noexcept;

 private:
  int n_;
  int t_;
  // c_[1..t_] ascending, c_[t_ + 1] == n_ as a sentinel.
  std::array<int, kMaxOrder + 2> c_{};
  VertexMask mask_ = 0;
};

std::uint64_t revolving_door_rank(int n, int t, VertexMask subset);
VertexMask revolving_door_unrank(int n, int t, std::uint64_t rank);

}  // namespace rna
