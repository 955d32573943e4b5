// Finite Grassmann algebra on m generators, basis indexed by subsets of
// {0..m-1} as bit masks. e_i^2 = 0, e_i e_j = -e_j e_i; the sign of a monomial
// product is the parity of the merge permutation (inversion count).

#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>

#include "titsforge/sparse.hpp"

namespace titsforge {

class GrassmannContext {
 public:
  // Subset-indexed basis is 2^m; cap m to keep that tractable.
  static constexpr int kMaxGenerators = 24;

  explicit GrassmannContext(int m) : m_(m) {
    if (m < 0 || m > kMaxGenerators)
      throw std::invalid_argument("Grassmann generator count out of range (0..24)");
  }

  int generators() const { return m_; }

  static int parity(uint32_t mask) { return std::popcount(mask) & 1; }

  // Monomial product: zero iff the subsets intersect, else +-(union monomial).
  // Returns (mask, sign) with sign in {+1,-1}.
  std::optional<std::pair<uint32_t, int>> mul(uint32_t a, uint32_t b) const {
    if ((a | b) >> m_) throw std::invalid_argument("Grassmann monomial outside context");
    if (a & b) return std::nullopt;
    // Inversions: pairs (i in a, j in b) with j < i.
    int inv = 0;
    uint32_t rest = a;
    while (rest) {
      uint32_t low = rest & (~rest + 1);
      uint32_t below = low - 1;
      inv += std::popcount(b & below);
      rest ^= low;
    }
    return std::make_pair(a | b, (inv & 1) ? -1 : +1);
  }

 private:
  int m_;
};

// Element of G_0bar, used as scalars for envelope computations: a sparse
// combination of even Grassmann monomials (indexed by mask).
template <class K>
using GrassScalar = SVec<K>;

template <class K>
GrassScalar<K> grass_mul(const GrassmannContext& ctx, const GrassScalar<K>& a, const GrassScalar<K>& b) {
  GrassScalar<K> out;
  for (const auto& [ma, ca] : a.t)
    for (const auto& [mb, cb] : b.t) {
      auto prod = ctx.mul(static_cast<uint32_t>(ma), static_cast<uint32_t>(mb));
      if (!prod) continue;
      K c = ca * cb;
      if (prod->second < 0) c = -c;
      out.add_term(static_cast<int>(prod->first), c);
    }
  return out;
}

}  // namespace titsforge
