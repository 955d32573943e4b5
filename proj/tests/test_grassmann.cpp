#include <catch2/catch_amalgamated.hpp>

#include <bit>

#include "titsforge/field.hpp"
#include "titsforge/grassmann.hpp"

using namespace titsforge;

namespace {

// Naive oracle: normalize the concatenated generator list letter by letter
// (bubble sort counting swaps; adjacent equal letters kill the monomial).
std::optional<std::pair<uint32_t, int>> naive_mul(uint32_t a, uint32_t b) {
  std::vector<int> letters;
  for (int i = 0; i < 32; ++i)
    if (a >> i & 1) letters.push_back(i);
  for (int i = 0; i < 32; ++i)
    if (b >> i & 1) letters.push_back(i);
  int sign = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 0; i + 1 < letters.size(); ++i) {
      if (letters[i] == letters[i + 1]) return std::nullopt;
      if (letters[i] > letters[i + 1]) {
        std::swap(letters[i], letters[i + 1]);
        sign = -sign;
        moved = true;
      }
    }
  }
  uint32_t m = 0;
  for (int l : letters) m |= 1u << l;
  return std::make_pair(m, sign);
}

}  // namespace

TEST_CASE("generator count capped at 24") {
  CHECK_THROWS_AS(GrassmannContext(25), std::invalid_argument);
  CHECK_THROWS_AS(GrassmannContext(-1), std::invalid_argument);
  CHECK_NOTHROW(GrassmannContext(24));
}

TEST_CASE("monomial products match the naive normalization oracle") {
  GrassmannContext ctx(6);
  for (uint32_t a = 0; a < 64; ++a)
    for (uint32_t b = 0; b < 64; ++b) {
      auto fast = ctx.mul(a, b);
      auto slow = naive_mul(a, b);
      REQUIRE(fast.has_value() == slow.has_value());
      // zero iff overlapping subsets
      CHECK(fast.has_value() == ((a & b) == 0));
      if (fast) {
        CHECK(fast->first == (a | b));
        CHECK(fast->second == slow->second);
      }
    }
}

TEST_CASE("parity of a monomial is |subset| mod 2") {
  CHECK(GrassmannContext::parity(0b1011u) == 1);
  CHECK(GrassmannContext::parity(0b11u) == 0);
}

TEST_CASE("grass scalar multiplication") {
  RatField q;
  GrassmannContext ctx(4);
  GrassScalar<Rat> a = SVec<Rat>::unit(0b0101, q.one());   // e0 e2
  GrassScalar<Rat> b = SVec<Rat>::unit(0b1010, q.of(2));   // e1 e3
  auto p = grass_mul(ctx, a, b);
  // e0e2 * e1e3 = e0 e2 e1 e3 = -e0e1e2e3
  REQUIRE(p.nnz() == 1);
  CHECK(p.get(0b1111) == q.of(-2));
  // even scalars commute
  CHECK(grass_mul(ctx, b, a) == p);
}
