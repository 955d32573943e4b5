// Triality Lie (super)algebras: orthosymplectic matrix algebras osp(C,b),
// the solver for tri(C) = {(d0,d1,d2) : d0(x*y) = d1(x)*y + (-1)^{|d||x|} x*d2(y)},
// the order-3 automorphism theta, and the distinguished elements t_{x,y}.
// The relation is always taken with the symmetric (para-Hurwitz) product.

#pragma once

#include <string>
#include <vector>

#include "titsforge/algebra.hpp"
#include "titsforge/composition.hpp"
#include "titsforge/linalg.hpp"

namespace titsforge {

template <class F>
struct TrialityElement {
  using K = typename F::Elem;
  SMat<K> d0, d1, d2;
  int parity = 0;
};

template <class F>
struct OspBasis {
  std::vector<SMat<typename F::Elem>> mats;  // evens first, then odds
  int dim_even = 0, dim_odd = 0;
};

// Deterministic basis of all homogeneous X with
// b(Xx,y) + (-1)^{|X||x|} b(x,Xy) = 0.
template <class F>
OspBasis<F> osp_basis(const SuperSpace& space, const QForm<F>& b, const F& field) {
  using K = typename F::Elem;
  const int n = space.dim();
  if (b.rank(field.one()) < n) throw GateError("osp: degenerate bilinear form");
  OspBasis<F> out;
  for (int par = 0; par <= 1; ++par) {
    // unknown slots (r,c) with parity[r] = parity[c] xor par, column-major
    std::vector<std::pair<int, int>> slots;
    std::vector<int> slot_of(n * n, -1);
    for (int c = 0; c < n; ++c)
      for (int r = 0; r < n; ++r)
        if (space.parity[r] == (space.parity[c] ^ par)) {
          slot_of[c * n + r] = static_cast<int>(slots.size());
          slots.emplace_back(r, c);
        }
    if (slots.empty()) continue;
    std::vector<SVec<K>> rows(n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        SVec<K>& row = rows[x * n + y];
        for (int r = 0; r < n; ++r) {
          int s1 = slot_of[x * n + r];  // X_{r,x} b[r][y]
          if (s1 >= 0) row.add_term(s1, b.bm[r][y]);
          int s2 = slot_of[y * n + r];  // (-1)^{par |x|} X_{r,y} b[x][r]
          if (s2 >= 0) {
            K c = b.bm[x][r];
            if (par && space.parity[x]) c = -c;
            row.add_term(s2, c);
          }
        }
      }
    auto sol = solve_linear(rows, static_cast<int>(slots.size()), field.one());
    for (const auto& kv : sol.kernel) {
      SMat<K> m(n, n, par);
      for (const auto& [s, c] : kv.t) m.col[slots[s].second].add_term(slots[s].first, c);
      out.mats.push_back(std::move(m));
      (par ? out.dim_odd : out.dim_even)++;
    }
  }
  return out;
}

template <class F>
SVec<typename F::Elem> flatten_triple(const TrialityElement<F>& t) {
  using K = typename F::Elem;
  const int nn = t.d0.rows * t.d0.cols;
  SVec<K> v = t.d0.flatten();
  for (const auto& [i, c] : t.d1.flatten().t) v.add_term(nn + i, c);
  for (const auto& [i, c] : t.d2.flatten().t) v.add_term(2 * nn + i, c);
  return v;
}

// Membership: components in osp and the defining relation on all basis pairs.
template <class F>
bool tri_member(const AlgebraTable<F>& bullet, const QForm<F>& b, const TrialityElement<F>& t) {
  using K = typename F::Elem;
  const int n = bullet.dim();
  const int par = t.parity;
  for (const SMat<K>* d : {&t.d0, &t.d1, &t.d2})
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        K s1 = b.bil(d->col[x], SVec<K>::unit(y, bullet.field.one()));
        K s2 = b.bil(SVec<K>::unit(x, bullet.field.one()), d->col[y]);
        K tot = (par && bullet.space.parity[x]) ? s1 - s2 : s1 + s2;
        if (!tot.is_zero()) return false;
      }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      SVec<K> lhs = t.d0.apply(bullet.product(x, y));
      lhs -= bullet.mul(t.d1.col[x], SVec<K>::unit(y, bullet.field.one()));
      SVec<K> third = bullet.mul(SVec<K>::unit(x, bullet.field.one()), t.d2.col[y]);
      if (par && bullet.space.parity[x]) lhs += third;
      else lhs -= third;
      if (!lhs.is_zero()) return false;
    }
  return true;
}

template <class F>
struct TrialityAlgebra {
  using K = typename F::Elem;
  AlgebraTable<F> bullet;  // symmetric product the relation refers to
  QForm<F> form;
  std::vector<TrialityElement<F>> basis;  // evens first, then odds
  RowSpan<K> span{true};
  int dim_even = 0, dim_odd = 0;

  explicit TrialityAlgebra(AlgebraTable<F> b) : bullet(std::move(b)) {}

  int dim() const { return static_cast<int>(basis.size()); }

  bool member(const TrialityElement<F>& t) const { return span.contains(flatten_triple(t)); }

  SVec<K> decompose(const TrialityElement<F>& t) const {
    auto d = span.decompose(flatten_triple(t));
    if (!d) throw std::logic_error("element not in tri");
    return *d;
  }

  TrialityElement<F> from_coords(const SVec<K>& coords) const {
    const int n = bullet.dim();
    TrialityElement<F> t;
    t.d0 = SMat<K>(n, n);
    t.d1 = SMat<K>(n, n);
    t.d2 = SMat<K>(n, n);
    int par = -1;
    for (const auto& [k, c] : coords.t) {
      const auto& b = basis[k];
      t.d0 = t.d0 + b.d0.scaled(c);
      t.d1 = t.d1 + b.d1.scaled(c);
      t.d2 = t.d2 + b.d2.scaled(c);
      if (par == -1) par = b.parity;
    }
    t.parity = par < 0 ? 0 : par;
    t.d0.parity = t.d1.parity = t.d2.parity = t.parity;
    return t;
  }
};

// Brute-force kernel solve for tri over osp^3, per parity.
template <class F>
TrialityAlgebra<F> tri_solve(const AlgebraTable<F>& bullet, const QForm<F>& form) {
  using K = typename F::Elem;
  const F& field = bullet.field;
  const int n = bullet.dim();
  TrialityAlgebra<F> T(bullet);
  T.form = form;
  OspBasis<F> osp = osp_basis(bullet.space, form, field);
  for (int par = 0; par <= 1; ++par) {
    std::vector<const SMat<K>*> O;
    for (const auto& m : osp.mats)
      if (m.parity == par) O.push_back(&m);
    if (O.empty()) continue;
    const int m = static_cast<int>(O.size());
    std::vector<SVec<K>> rows(n * n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const SVec<K>& pxy = bullet.product(x, y);
        int base = (x * n + y) * n;
        for (int k = 0; k < m; ++k) {
          SVec<K> v0 = O[k]->apply(pxy);
          for (const auto& [coord, c] : v0.t) rows[base + coord].add_term(k, c);
          SVec<K> v1 = bullet.mul(O[k]->col[x], SVec<K>::unit(y, field.one()));
          for (const auto& [coord, c] : v1.t) rows[base + coord].add_term(m + k, -c);
          SVec<K> v2 = bullet.mul(SVec<K>::unit(x, field.one()), O[k]->col[y]);
          bool flip = par && bullet.space.parity[x];
          for (const auto& [coord, c] : v2.t) rows[base + coord].add_term(2 * m + k, flip ? c : -c);
        }
      }
    auto sol = solve_linear(rows, 3 * m, field.one());
    for (const auto& kv : sol.kernel) {
      TrialityElement<F> t;
      t.parity = par;
      t.d0 = SMat<K>(n, n, par);
      t.d1 = SMat<K>(n, n, par);
      t.d2 = SMat<K>(n, n, par);
      for (const auto& [idx, c] : kv.t) {
        int comp = idx / m, k = idx % m;
        SMat<K>& target = comp == 0 ? t.d0 : (comp == 1 ? t.d1 : t.d2);
        target = target + O[k]->scaled(c);
        target.parity = par;
      }
      T.basis.push_back(std::move(t));
      (par ? T.dim_odd : T.dim_even)++;
    }
  }
  for (const auto& t : T.basis) T.span.offer(flatten_triple(t));
  return T;
}

// theta: cyclic component shift (d0,d1,d2) -> (d2,d0,d1), re-verified.
template <class F>
TrialityElement<F> theta(const TrialityAlgebra<F>& T, const TrialityElement<F>& t) {
  TrialityElement<F> r{t.d2, t.d0, t.d1, t.parity};
  if (!T.member(r)) throw GateError("theta: image not in tri");
  return r;
}

// t_{x,y} = (sigma_{x,y}, 1/2 b(x,y) 1 - r_x l_y, 1/2 b(x,y) 1 - l_x r_y)
// with l_x(z) = x*z, r_x(z) = (-1)^{|x||z|} z*x,
// sigma_{x,y}(z) = (-1)^{|y||z|} b(x,z) y - (-1)^{|x|(|y|+|z|)} b(y,z) x.
template <class F>
TrialityElement<F> t_xy(const AlgebraTable<F>& bullet, const QForm<F>& b,
                        const SVec<typename F::Elem>& x, const SVec<typename F::Elem>& y) {
  using K = typename F::Elem;
  const F& field = bullet.field;
  const int n = bullet.dim();
  auto px_ = bullet.parity_of(x), py_ = bullet.parity_of(y);
  if ((!x.is_zero() && !px_) || (!y.is_zero() && !py_))
    throw GateError("t_{x,y}: arguments must be homogeneous");
  int px = px_.value_or(0), py = py_.value_or(0);
  int par = (px + py) & 1;

  TrialityElement<F> t;
  t.parity = par;
  t.d0 = SMat<K>(n, n, par);
  for (int z = 0; z < n; ++z) {
    int pz = bullet.space.parity[z];
    SVec<K> ez = SVec<K>::unit(z, field.one());
    K bxz = b.bil(x, ez), byz = b.bil(y, ez);
    SVec<K> col = y.scaled((py & pz) ? -bxz : bxz);
    K c2 = (px & ((py + pz) & 1)) ? byz : -byz;
    col.axpy(c2, x);
    t.d0.col[z] = std::move(col);
  }

  auto lmul_bullet = [&](const SVec<K>& a) {
    SMat<K> mmat(n, n, bullet.parity_of(a).value_or(0));
    for (int z = 0; z < n; ++z) mmat.col[z] = bullet.mul(a, SVec<K>::unit(z, field.one()));
    return mmat;
  };
  auto rmul_bullet = [&](const SVec<K>& a) {
    int pa = bullet.parity_of(a).value_or(0);
    SMat<K> mmat(n, n, pa);
    for (int z = 0; z < n; ++z) {
      SVec<K> v = bullet.mul(SVec<K>::unit(z, field.one()), a);
      if (pa && bullet.space.parity[z]) v = v.negated();
      mmat.col[z] = std::move(v);
    }
    return mmat;
  };

  const K half = field.of(2).inv();
  K hb = half * b.bil(x, y);
  SMat<K> id = SMat<K>::identity(n, field.one());
  t.d1 = id.scaled(hb) - rmul_bullet(x).compose(lmul_bullet(y));
  t.d2 = id.scaled(hb) - lmul_bullet(x).compose(rmul_bullet(y));
  t.d1.parity = t.d2.parity = par;
  return t;
}

// Conjugated-Hurwitz form of t_{x,y}, written with the unital product and
// conjugations: (n(x,.)y - n(y,.)x, 1/2 n(x,y) 1 - R_{bar x} R_y,
// 1/2 n(x,y) 1 - L_{bar x} L_y). Cross-check against the symmetric form.
template <class F>
TrialityElement<F> t_xy_hurwitz(const Composition<F>& C, const SVec<typename F::Elem>& x,
                                const SVec<typename F::Elem>& y) {
  using K = typename F::Elem;
  const F& field = C.alg.field;
  const int n = C.dim();
  TrialityElement<F> t;
  t.parity = 0;
  t.d0 = SMat<K>(n, n, 0);
  for (int z = 0; z < n; ++z) {
    SVec<K> ez = SVec<K>::unit(z, field.one());
    SVec<K> col = y.scaled(C.norm.bil(x, ez));
    col.axpy(-C.norm.bil(y, ez), x);
    t.d0.col[z] = std::move(col);
  }
  const K half = field.of(2).inv();
  K hb = half * C.norm.bil(x, y);
  SMat<K> id = SMat<K>::identity(n, field.one());
  SMat<K> Rxbar = C.alg.rmul(C.conj(x)), Ry = C.alg.rmul(y);
  SMat<K> Lxbar = C.alg.lmul(C.conj(x)), Ly = C.alg.lmul(y);
  t.d1 = id.scaled(hb) - Rxbar.compose(Ry);
  t.d2 = id.scaled(hb) - Lxbar.compose(Ly);
  return t;
}

}  // namespace titsforge
