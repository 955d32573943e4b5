// Sparse structure-constant tables over a super space, the super tensor
// product with Koszul signs, and Grassmann envelope arithmetic.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "titsforge/field.hpp"
#include "titsforge/grassmann.hpp"
#include "titsforge/sparse.hpp"
#include "titsforge/superspace.hpp"

namespace titsforge {

template <class F>
struct AlgebraTable {
  using K = typename F::Elem;

  F field;
  SuperSpace space;
  std::unordered_map<uint64_t, SVec<K>> prod;  // key = i*dim + j
  std::optional<SVec<K>> unit;

  explicit AlgebraTable(F f) : field(std::move(f)) {}
  AlgebraTable(F f, SuperSpace s) : field(std::move(f)), space(std::move(s)) {}

  int dim() const { return space.dim(); }

  uint64_t key(int i, int j) const { return static_cast<uint64_t>(i) * space.dim() + j; }

  const SVec<K>& product(int i, int j) const {
    static const SVec<K> kZero;
    auto it = prod.find(key(i, j));
    return it == prod.end() ? kZero : it->second;
  }

  void set_product(int i, int j, SVec<K> v) {
    if (v.is_zero())
      prod.erase(key(i, j));
    else
      prod[key(i, j)] = std::move(v);
  }

  SVec<K> mul(const SVec<K>& x, const SVec<K>& y) const {
    SVec<K> r;
    for (const auto& [i, a] : x.t)
      for (const auto& [j, b] : y.t) r.axpy(a * b, product(i, j));
    return r;
  }

  // Left/right multiplication operators as matrices.
  SMat<K> lmul(const SVec<K>& x) const {
    SMat<K> m(dim(), dim(), parity_of(x).value_or(0));
    for (int c = 0; c < dim(); ++c) m.col[c] = mul(x, SVec<K>::unit(c, field.one()));
    return m;
  }
  SMat<K> rmul(const SVec<K>& x) const {
    SMat<K> m(dim(), dim(), parity_of(x).value_or(0));
    for (int c = 0; c < dim(); ++c) m.col[c] = mul(SVec<K>::unit(c, field.one()), x);
    return m;
  }

  // Parity of a homogeneous vector; nullopt for 0 or mixed.
  std::optional<int> parity_of(const SVec<K>& v) const {
    std::optional<int> p;
    for (const auto& [i, c] : v.t) {
      int q = space.parity[i];
      if (!p)
        p = q;
      else if (*p != q)
        return std::nullopt;
    }
    return p;
  }

  bool is_unital_with(const SVec<K>& e) const {
    for (int i = 0; i < dim(); ++i) {
      SVec<K> b = SVec<K>::unit(i, field.one());
      if (!(mul(e, b) == b) || !(mul(b, e) == b)) return false;
    }
    return true;
  }

  bool is_supercommutative() const {
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j) {
        SVec<K> s = product(i, j);
        if (space.parity[i] && space.parity[j])
          s += product(j, i);  // xy = -yx
        else
          s -= product(j, i);  // xy = yx
        if (!s.is_zero()) return false;
      }
    return true;
  }

  bool is_super_anticommutative() const {
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j) {
        SVec<K> s = product(i, j);
        if (space.parity[i] && space.parity[j])
          s -= product(j, i);  // [x,y] = +[y,x] for odd-odd
        else
          s += product(j, i);
        if (!s.is_zero()) return false;
      }
    return true;
  }
};

// Super tensor product: basis (a_i (x) b_j), parity sum, and the Koszul rule
// (a(x)b)(c(x)d) = (-1)^{|b||c|} (ac (x) bd).
template <class F>
AlgebraTable<F> super_tensor(const AlgebraTable<F>& A, const AlgebraTable<F>& B,
                             const std::string& sep = "(x)") {
  if (!(A.field == B.field)) throw GateError("super_tensor: mismatched fields");
  using K = typename F::Elem;
  AlgebraTable<F> T(A.field);
  const int na = A.dim(), nb = B.dim();
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      T.space.push(A.space.labels[i] + sep + B.space.labels[j],
                   (A.space.parity[i] + B.space.parity[j]) & 1);
  T.space.validate();
  auto idx = [nb](int i, int j) { return i * nb + j; };
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      for (int k = 0; k < na; ++k)
        for (int l = 0; l < nb; ++l) {
          const SVec<K>& ac = A.product(i, k);
          if (ac.is_zero()) continue;
          const SVec<K>& bd = B.product(j, l);
          if (bd.is_zero()) continue;
          bool neg = (B.space.parity[j] & A.space.parity[k]) != 0;
          SVec<K> out;
          for (const auto& [r, ca] : ac.t)
            for (const auto& [s, cb] : bd.t) {
              K c = ca * cb;
              if (neg) c = -c;
              out.add_term(idx(r, s), c);
            }
          if (!out.is_zero()) T.set_product(idx(i, j), idx(k, l), std::move(out));
        }
  if (A.unit && B.unit) {
    SVec<K> u;
    for (const auto& [i, a] : A.unit->t)
      for (const auto& [j, b] : B.unit->t) u.add_term(idx(i, j), a * b);
    T.unit = std::move(u);
  }
  return T;
}

// ---------------------------------------------------------------------------
// Grassmann envelope G(A) = (A_0 (x) G_0) + (A_1 (x) G_1)
// ---------------------------------------------------------------------------

// Envelope element: sparse map (basis index, Grassmann mask) -> scalar, with
// the parity of the basis element matching the parity of the monomial.
template <class K>
using EnvElem = std::map<std::pair<int, uint32_t>, K>;

template <class F>
struct Envelope {
  using K = typename F::Elem;
  const AlgebraTable<F>& A;
  GrassmannContext ctx;

  Envelope(const AlgebraTable<F>& a, int generators) : A(a), ctx(generators) {}

  void check_term(int basis, uint32_t mask) const {
    if (A.space.parity[basis] != GrassmannContext::parity(mask))
      throw GateError("parity-inconsistent envelope term: " + A.space.labels[basis]);
  }

  EnvElem<K> term(int basis, uint32_t mask, K c) const {
    check_term(basis, mask);
    EnvElem<K> e;
    if (!c.is_zero()) e[{basis, mask}] = std::move(c);
    return e;
  }

  static void add_term(EnvElem<K>& e, std::pair<int, uint32_t> key, const K& c) {
    if (c.is_zero()) return;
    auto it = e.find(key);
    if (it == e.end())
      e.emplace(key, c);
    else {
      it->second += c;
      if (it->second.is_zero()) e.erase(it);
    }
  }

  EnvElem<K> add(const EnvElem<K>& x, const EnvElem<K>& y) const {
    EnvElem<K> r = x;
    for (const auto& [k, c] : y) add_term(r, k, c);
    return r;
  }

  EnvElem<K> sub(const EnvElem<K>& x, const EnvElem<K>& y) const {
    EnvElem<K> r = x;
    for (const auto& [k, c] : y) add_term(r, k, -c);
    return r;
  }

  // (a (x) g)(b (x) h) = (-1)^{|g||b|} ab (x) gh
  EnvElem<K> mul(const EnvElem<K>& x, const EnvElem<K>& y) const {
    EnvElem<K> r;
    for (const auto& [kx, cx] : x) {
      for (const auto& [ky, cy] : y) {
        auto gm = ctx.mul(kx.second, ky.second);
        if (!gm) continue;
        const SVec<K>& ab = A.product(kx.first, ky.first);
        if (ab.is_zero()) continue;
        int sign = gm->second;
        if (GrassmannContext::parity(kx.second) & A.space.parity[ky.first]) sign = -sign;
        K c = cx * cy;
        if (sign < 0) c = -c;
        for (const auto& [b, cb] : ab.t) add_term(r, {b, gm->first}, c * cb);
      }
    }
    // terms with zero A-product or clashing masks vanish; all survivors are
    // parity-consistent because parities add on both factors
    return r;
  }

  // Multiply by a Grassmann-even scalar (element of G_0).
  EnvElem<K> scale(const GrassScalar<K>& s, const EnvElem<K>& x) const {
    EnvElem<K> r;
    for (const auto& [ms, cs] : s.t)
      for (const auto& [kx, cx] : x) {
        auto gm = ctx.mul(static_cast<uint32_t>(ms), kx.second);
        if (!gm) continue;
        K c = cs * cx;
        if (gm->second < 0) c = -c;
        add_term(r, {kx.first, gm->first}, c);
      }
    return r;
  }

  // Extension of a linear form (coefficients per basis index) to G_0 values.
  GrassScalar<K> form(const SVec<K>& functional, const EnvElem<K>& x) const {
    GrassScalar<K> r;
    for (const auto& [k, c] : x) {
      K f = functional.get(k.first);
      if (!f.is_zero()) r.add_term(static_cast<int>(k.second), f * c);
    }
    return r;
  }

  // An element of G(A) = (A_0 (x) G_0) + (A_1 (x) G_1) is exactly an even
  // element of A (x) G: each term has matching basis and monomial parity.
  bool is_even(const EnvElem<K>& x) const {
    for (const auto& [k, c] : x) {
      (void)c;
      if (A.space.parity[k.first] != GrassmannContext::parity(k.second)) return false;
    }
    return true;
  }
};

}  // namespace titsforge
