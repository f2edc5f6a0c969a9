#include "rna/revolving_door.hpp"

#include <string>

namespace rna {

namespace {

struct PascalTable {
  std::array<std::array<std::uint64_t, kMaxOrder + 1>, kMaxOrder + 1> c{};

  PascalTable() {
    for (int n = 0; n <= kMaxOrder; ++n) {
      c[static_cast<std::size_t>(n)][0] = 1;
      for (int k = 1; k <= n; ++k) {
        c[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
            c[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
            (k < n ? c[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)] : 0);
      }
    }
  }
};

const PascalTable& pascal() {
  static const PascalTable table;
  return table;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > kMaxOrder || k < 0 || k > n) return 0;
  return pascal().c[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

VertexMask revolving_door_unrank(int n, int t, std::uint64_t rank) {
  if (t < 0 || t > n || n > kMaxOrder || rank >= binomial(n, t)) {
    throw validation_error("revolving-door rank out of range");
  }
  VertexMask subset = 0;
  while (t > 0 && t < n) {
    const std::uint64_t head = binomial(n - 1, t);
    if (rank >= head) {
      // Second half: reversed Gamma(n-1, t-1), each with n-1 added.
      subset |= bit(n - 1);
      rank = binomial(n - 1, t - 1) - 1 - (rank - head);
      --t;
    }
    --n;
  }
  if (t == n) subset |= full_mask(n);
  return subset;
}

std::uint64_t revolving_door_rank(int n, int t, VertexMask subset) {
  if (t < 0 || t > n || n > kMaxOrder || popcount(subset) != t || (subset & ~full_mask(n)) != 0) {
    throw validation_error("subset does not match revolving-door parameters");
  }
  // Each level that contains n-1 maps the inner rank r to base - r. Track the
  // composed map as offset + sign * r; the innermost rank is 0. Unsigned
  // wraparound cancels out in the final value.
  std::uint64_t offset = 0;
  bool negative = false;
  while (t > 0 && t < n) {
    if ((subset & bit(n - 1)) != 0) {
      const std::uint64_t base = binomial(n - 1, t) + binomial(n - 1, t - 1) - 1;
      offset = negative ? offset - base : offset + base;
      negative = !negative;
      subset &= ~bit(n - 1);
      --t;
    }
    --n;
  }
  return offset;
}

RevolvingDoor::RevolvingDoor(int n, int t, std::uint64_t rank) : n_(n), t_(t) {
  if (n < 0 || n > kMaxOrder || t < 0 || t > n) {
    throw validation_error("revolving door needs 0 <= t <= n <= 64, got n=" + std::to_string(n) +
                           " t=" + std::to_string(t));
  }
  mask_ = revolving_door_unrank(n, t, rank);
  int j = 1;
  for (VertexMask rest = mask_; rest != 0; rest &= rest - 1) {
    c_[static_cast<std::size_t>(j++)] = std::countr_zero(rest);
  }
  c_[static_cast<std::size_t>(t + 1)] = n;
}

bool RevolvingDoor::next(int& removed, int& added) noexcept {
  auto c = [this](int i) -> int& { return c_[static_cast<std::size_t>(i)]; };
  auto apply = [&](int out, int in) {
    removed = out;
    added = in;
    mask_ = (mask_ & ~bit(out)) | bit(in);
    return true;
  };

  if (t_ == 0 || t_ == n_) return false;
  if (t_ == 1) {
    if (c(1) + 1 >= n_) return false;
    ++c(1);
    return apply(c(1) - 1, c(1));
  }

  int j = 2;
  bool try_decrease;
  if (t_ % 2 == 1) {
    if (c(1) + 1 < c(2)) {
      ++c(1);
      return apply(c(1) - 1, c(1));
    }
    try_decrease = true;
  } else {
    if (c(1) > 0) {
      --c(1);
      return apply(c(1) + 1, c(1));
    }
    try_decrease = false;
  }

  for (;;) {
    if (try_decrease) {
      // Here c_j == c_{j-1} + 1.
      if (c(j) >= j) {
        const int out = c(j);
        c(j) = c(j - 1);
        c(j - 1) = j - 2;
        return apply(out, j - 2);
      }
      ++j;
    }
    // Here c_{j-1} == j - 2.
    if (c(j) + 1 < c(j + 1)) {
      const int out = c(j - 1);
      c(j - 1) = c(j);
      ++c(j);
      return apply(out, c(j));
    }
    ++j;
    if (j > t_) return false;
    try_decrease = true;
  }
}

}  // namespace rna
