#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "rna/revolving_door.hpp"

using namespace rna;

namespace {

// The order defined recursively: G(n,t) = G(n-1,t), reverse(G(n-1,t-1)) + {n-1}.
std::vector<VertexMask> recursive_order(int n, int t) {
  if (t == 0) return {0};
  if (t == n) return {bit(n) - 1};
  std::vector<VertexMask> out = recursive_order(n - 1, t);
  std::vector<VertexMask> tail = recursive_order(n - 1, t - 1);
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) out.push_back(*it | bit(n - 1));
  return out;
}

std::vector<VertexMask> walk(int n, int t, std::uint64_t start = 0) {
  RevolvingDoor door(n, t, start);
  std::vector<VertexMask> out{door.current()};
  int removed = 0;
  int added = 0;
  for (;;) {
    const VertexMask before = door.current();
    if (!door.next(removed, added)) break;
    const VertexMask after = door.current();
    // Exactly one element out and one in, as reported.
    CHECK((before & ~after) == bit(removed));
    CHECK((after & ~before) == bit(added));
    out.push_back(after);
  }
  return out;
}

}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(23, 11) == 1352078);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(64, 32) == oracle::choose(64, 32));
}

TEST_CASE("property: revolving door matches the recursive definition") {
  for (int n = 1; n <= 13; ++n) {
    for (int t = 0; t <= n; ++t) {
      CAPTURE(n);
      CAPTURE(t);
      const auto seq = walk(n, t);
      CHECK(seq == recursive_order(n, t));
      CHECK(seq.size() == oracle::choose(n, t));
      CHECK(std::set<VertexMask>(seq.begin(), seq.end()).size() == seq.size());
      for (VertexMask m : seq) CHECK(popcount(m) == t);
    }
  }
}

TEST_CASE("property: rank and unrank invert each other along the walk") {
  for (int n = 1; n <= 12; ++n) {
    for (int t = 0; t <= n; ++t) {
      const auto seq = recursive_order(n, t);
      for (std::size_t r = 0; r < seq.size(); ++r) {
        CHECK(revolving_door_unrank(n, t, r) == seq[r]);
        CHECK(revolving_door_rank(n, t, seq[r]) == r);
      }
    }
  }
}

TEST_CASE("starting mid-sequence continues the same walk") {
  const int n = 11;
  const int t = 5;
  const auto full = walk(n, t);
  for (std::uint64_t start : {1ULL, 17ULL, 200ULL, 461ULL}) {
    const auto part = walk(n, t, start);
    CHECK(std::equal(part.begin(), part.end(), full.begin() + static_cast<std::ptrdiff_t>(start)));
  }
}

TEST_CASE("large instances stay within one word") {
  const auto last = revolving_door_unrank(40, 20, binomial(40, 20) - 1);
  CHECK(popcount(last) == 20);
  CHECK(revolving_door_rank(40, 20, last) == binomial(40, 20) - 1);
}
