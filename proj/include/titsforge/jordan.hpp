// Jordan (super)algebras with normalized traces: H_3(C), J^{0|2}, D_t, the
// Kaplansky algebra K_3 and Kac's K_10, divided-power algebras O(1;n) and the
// commutative alternative superalgebras B(Gamma,d), plus inner derivations
// d_{x,y} = [l_x,l_y] and the degree-3 Cayley-Hamilton certifier on Grassmann
// envelopes.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "titsforge/algebra.hpp"
#include "titsforge/composition.hpp"
#include "titsforge/derivations.hpp"

namespace titsforge {

template <class F>
struct Jordan {
  using K = typename F::Elem;

  AlgebraTable<F> alg;
  std::optional<SVec<K>> trace;  // normalized trace functional (coefficients)
  SVec<K> unit;
  std::vector<SVec<K>> j0;  // trace-zero basis (when the trace exists)
  RowSpan<K> j0_span{true};
  std::string kind;

  explicit Jordan(AlgebraTable<F> a) : alg(std::move(a)) {}

  int dim() const { return alg.dim(); }

  K trace_of(const SVec<K>& x) const {
    if (!trace) throw GateError(kind + ": normalized trace unavailable");
    K r;
    for (const auto& [i, c] : x.t) r += trace->get(i) * c;
    return r;
  }

  // x*y = xy - t(xy) 1, the traceless product on J^0.
  SVec<K> star(const SVec<K>& x, const SVec<K>& y) const {
    SVec<K> p = alg.mul(x, y);
    p -= unit.scaled(trace_of(p));
    return p;
  }

  void finish() {
    alg.unit = unit;
    if (trace) {
      std::vector<SVec<K>> row(1);
      for (int i = 0; i < dim(); ++i) row[0].add_term(i, trace->get(i));
      j0 = solve_linear(row, dim(), alg.field.one()).kernel;
      for (const auto& v : j0) j0_span.offer(v);
    }
  }
};

// d_{x,y} = [l_x, l_y] (super commutator of left multiplications).
template <class F>
SMat<typename F::Elem> jordan_inner_derivation(const Jordan<F>& J, const SVec<typename F::Elem>& x,
                                               const SVec<typename F::Elem>& y) {
  auto px = J.alg.parity_of(x), py = J.alg.parity_of(y);
  if ((!x.is_zero() && !px) || (!y.is_zero() && !py))
    throw GateError("d_{x,y}: arguments must be homogeneous");
  SMat<typename F::Elem> lx = J.alg.lmul(x), ly = J.alg.lmul(y);
  lx.parity = px.value_or(0);
  ly.parity = py.value_or(0);
  return super_commutator(lx, ly);
}

template <class F>
DerivationSpan<typename F::Elem> inder_jordan_basis(const Jordan<F>& J) {
  using K = typename F::Elem;
  DerivationSpan<K> d;
  const int n = J.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (i == j && !(J.alg.space.parity[i] && J.alg.space.parity[j])) continue;
      SMat<K> m = jordan_inner_derivation(J, SVec<K>::unit(i, J.alg.field.one()),
                                          SVec<K>::unit(j, J.alg.field.one()));
      if (m.is_zero()) continue;
      d.offer(m, "d(" + J.alg.space.labels[i] + "," + J.alg.space.labels[j] + ")");
    }
  return d;
}

// ---------------------------------------------------------------------------
// H_3(C): hermitian 3x3 matrices over a Hurwitz algebra, in the e_i/iota_i
// basis with the four displayed product rules (indices mod 3).
// ---------------------------------------------------------------------------

template <class F>
Jordan<F> h3_make(const Composition<F>& C) {
  using K = typename F::Elem;
  if (C.kind == CompKind::B12 || C.kind == CompKind::B42)
    throw GateError("H_3 takes a Hurwitz algebra (dim 1,2,4,8)");
  const F& field = C.alg.field;
  const int dc = C.dim();
  SuperSpace s;
  for (int i = 0; i < 3; ++i) s.push("e" + std::to_string(i), 0);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < dc; ++k) s.push("i" + std::to_string(i) + "(" + C.alg.space.labels[k] + ")", 0);
  s.validate();

  auto iota = [dc](int i, int k) { return 3 + i * dc + k; };
  const K half = field.of(2).inv();

  AlgebraTable<F> t(field, s);
  // embed a C-vector into the iota_i block
  auto emb = [&](int i, const SVec<K>& v) {
    SVec<K> r;
    for (const auto& [k, c] : v.t) r.add_term(iota(i, k), c);
    return r;
  };
  for (int a = 0; a < 3; ++a) {
    t.set_product(a, a, SVec<K>::unit(a, field.one()));
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < dc; ++k) {
        if (a == i) continue;
        t.set_product(a, iota(i, k), SVec<K>::unit(iota(i, k), half));
        t.set_product(iota(i, k), a, SVec<K>::unit(iota(i, k), half));
      }
  }
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < dc; ++k)
      for (int j = 0; j < 3; ++j)
        for (int l = 0; l < dc; ++l) {
          SVec<K> a = SVec<K>::unit(k, field.one());
          SVec<K> b = SVec<K>::unit(l, field.one());
          if (j == (i + 1) % 3) {
            // iota_i(a) o iota_{i+1}(b) = iota_{i+2}(bar a bar b)
            t.set_product(iota(i, k), iota(j, l), emb((i + 2) % 3, C.alg.mul(C.conj(a), C.conj(b))));
          } else if (j == (i + 2) % 3) {
            // = iota_{i+2}(b) o iota_i(a) with (i+2, i) consecutive: bar b bar a
            t.set_product(iota(i, k), iota(j, l), emb((i + 1) % 3, C.alg.mul(C.conj(b), C.conj(a))));
          } else if (i == j) {
            K n2 = field.of(2) * C.norm.bm[k][l];
            SVec<K> r = SVec<K>::unit((i + 1) % 3, n2) + SVec<K>::unit((i + 2) % 3, n2);
            t.set_product(iota(i, k), iota(j, l), std::move(r));
          }
        }

  Jordan<F> J(std::move(t));
  J.kind = "h3:" + comp_kind_name(C.kind);
  J.unit = SVec<K>::unit(0, field.one()) + SVec<K>::unit(1, field.one()) + SVec<K>::unit(2, field.one());
  if (field.characteristic() != 3) {
    K third = field.of(3).inv();
    SVec<K> tr;
    for (int a = 0; a < 3; ++a) tr.add_term(a, third);
    J.trace = std::move(tr);
  }
  J.finish();
  return J;
}

// ---------------------------------------------------------------------------
// Simple Jordan superalgebras
// ---------------------------------------------------------------------------

template <class F>
Jordan<F> j02_make(F field) {
  using K = typename F::Elem;
  const K one = field.one();
  SuperSpace s = SuperSpace::make({{"1", 0}, {"u1", 1}, {"u2", 1}});
  AlgebraTable<F> t(field, s);
  for (int i = 0; i < 3; ++i) {
    t.set_product(0, i, SVec<K>::unit(i, one));
    t.set_product(i, 0, SVec<K>::unit(i, one));
  }
  t.set_product(1, 2, SVec<K>::unit(0, one));
  t.set_product(2, 1, SVec<K>::unit(0, -one));
  Jordan<F> J(std::move(t));
  J.kind = "j02";
  J.unit = SVec<K>::unit(0, one);
  J.trace = SVec<K>::unit(0, one);
  J.finish();
  return J;
}

// D_t stores t as an exact field element; D_t and D_{1/t} are isomorphic
// (swap x and y, rescale) but are not canonicalized here.
template <class F>
Jordan<F> dt_make(F field, typename F::Elem tparam) {
  using K = typename F::Elem;
  if (tparam.is_zero()) throw GateError("D_t requires t != 0");
  const K one = field.one(), half = field.of(2).inv();
  SuperSpace s = SuperSpace::make({{"e", 0}, {"f", 0}, {"x", 1}, {"y", 1}});
  AlgebraTable<F> t(field, s);
  t.set_product(0, 0, SVec<K>::unit(0, one));  // e^2 = e
  t.set_product(1, 1, SVec<K>::unit(1, one));  // f^2 = f
  for (int ev : {0, 1})
    for (int od : {2, 3}) {
      t.set_product(ev, od, SVec<K>::unit(od, half));
      t.set_product(od, ev, SVec<K>::unit(od, half));
    }
  SVec<K> xy = SVec<K>::unit(0, one) + SVec<K>::unit(1, tparam);
  t.set_product(2, 3, xy);
  t.set_product(3, 2, xy.negated());
  Jordan<F> J(std::move(t));
  J.kind = "dt";
  J.unit = SVec<K>::unit(0, one) + SVec<K>::unit(1, one);
  K onept = one + tparam;
  if (!onept.is_zero()) {
    SVec<K> tr;
    tr.add_term(0, tparam * onept.inv());
    tr.add_term(1, onept.inv());
    J.trace = std::move(tr);
  }
  J.finish();
  return J;
}

template <class F>
Jordan<F> k3_make(F field) {
  using K = typename F::Elem;
  const K one = field.one(), half = field.of(2).inv();
  SuperSpace s = SuperSpace::make({{"e", 0}, {"x", 1}, {"y", 1}});
  AlgebraTable<F> t(field, s);
  t.set_product(0, 0, SVec<K>::unit(0, one));
  for (int od : {1, 2}) {
    t.set_product(0, od, SVec<K>::unit(od, half));
    t.set_product(od, 0, SVec<K>::unit(od, half));
  }
  t.set_product(1, 2, SVec<K>::unit(0, one));
  t.set_product(2, 1, SVec<K>::unit(0, -one));
  Jordan<F> J(std::move(t));
  J.kind = "k3";  // non-unital building block: no unit, no trace
  J.finish();
  return J;
}

// K_10 = F 1 + (K_3 (x) K_3), product
// (a(x)b)(c(x)d) = (-1)^{|b||c|} ( ac (x) bd - 3/4 (a|c)(b|d) 1 ),
// where (.|.) extends the alternating form by (e|e) = 1/2.
template <class F>
Jordan<F> k10_make(F field) {
  using K = typename F::Elem;
  const K one = field.one();
  Jordan<F> K3 = k3_make(field);
  AlgebraTable<F> T = super_tensor(K3.alg, K3.alg);
  // adjoin the unit in front
  SuperSpace s;
  s.push("1", 0);
  for (int i = 0; i < 9; ++i) s.push(T.space.labels[i], T.space.parity[i]);
  s.validate();
  AlgebraTable<F> t(field, s);
  for (int i = 0; i < 10; ++i) {
    t.set_product(0, i, SVec<K>::unit(i, one));
    t.set_product(i, 0, SVec<K>::unit(i, one));
  }
  // supersymmetric form on K_3 basis e,x,y
  std::vector<std::vector<K>> form(3, std::vector<K>(3, field.zero()));
  form[0][0] = field.of(2).inv();
  form[1][2] = one;
  form[2][1] = -one;
  const K c34 = field.of(3) * field.of(4).inv();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          int u = i * 3 + j, w = k * 3 + l;
          SVec<K> v;
          for (const auto& [idx, c] : T.product(u, w).t) v.add_term(idx + 1, c);
          K corr = form[i][k] * form[j][l];
          if (!corr.is_zero()) {
            bool neg = (K3.alg.space.parity[j] & K3.alg.space.parity[k]) != 0;
            K cc = -(c34 * corr);
            if (neg) cc = -cc;
            v.add_term(0, cc);
          }
          t.set_product(u + 1, w + 1, std::move(v));
        }
  Jordan<F> J(std::move(t));
  J.kind = "k10";
  J.unit = SVec<K>::unit(0, one);
  J.trace = SVec<K>::unit(0, one);
  J.finish();
  return J;
}

// ---------------------------------------------------------------------------
// ch_3: the degree-3 Cayley-Hamilton polynomial on the Grassmann envelope
// ---------------------------------------------------------------------------

template <class F>
void ch3_gate(const Jordan<F>& J) {
  long p = J.alg.field.characteristic();
  if (p == 2 || p == 3) throw GateError("ch3 requires characteristic not in {2,3}");
  if (!J.trace) throw GateError("ch3 requires a normalized trace");
}

// ch3(x) = x^3 - 3 t(x) x^2 + (9/2 t(x)^2 - 3/2 t(x^2)) x
//          - (t(x^3) - 9/2 t(x^2) t(x) + 9/2 t(x)^3) 1,  x even in G(J).
template <class F>
EnvElem<typename F::Elem> ch3_eval(const Jordan<F>& J, const Envelope<F>& env,
                                   const EnvElem<typename F::Elem>& x) {
  using K = typename F::Elem;
  ch3_gate(J);
  if (!env.is_even(x)) throw GateError("ch3: argument must be even in the envelope");
  const F& f = J.alg.field;
  const K c92 = f.ratio(9, 2), c32 = f.ratio(3, 2);

  EnvElem<K> x2 = env.mul(x, x);
  EnvElem<K> x3 = env.mul(x2, x);  // power-associativity holds in Jordan algebras
  GrassScalar<K> tx = env.form(*J.trace, x);
  GrassScalar<K> tx2 = env.form(*J.trace, x2);
  GrassScalar<K> tx3 = env.form(*J.trace, x3);

  GrassScalar<K> tx_sq = grass_mul(env.ctx, tx, tx);
  GrassScalar<K> lin = tx_sq.scaled(c92) - tx2.scaled(c32);
  GrassScalar<K> cst = tx3 - grass_mul(env.ctx, tx2, tx).scaled(c92) +
                       grass_mul(env.ctx, tx_sq, tx).scaled(c92);

  EnvElem<K> unit_env;
  for (const auto& [i, c] : J.unit.t) Envelope<F>::add_term(unit_env, {i, 0u}, c);

  EnvElem<K> r = env.sub(x3, env.scale(tx.scaled(f.of(3)), x2));
  r = env.add(r, env.scale(lin, x));
  r = env.sub(r, env.scale(cst, unit_env));
  return r;
}

struct Ch3Report {
  bool holds = true;
  int draws = 0;
  unsigned seed = 0;
  std::string field_floor;  // documented Schwartz-Zippel sampling note
  std::string witness;
};

// Probabilistic identity check: evaluate ch3 on >= `draws` random even
// envelope elements, one Grassmann generator per odd basis coordinate.
template <class F>
Ch3Report ch3_verify(const Jordan<F>& J, unsigned seed = 1729, int draws = 20) {
  using K = typename F::Elem;
  ch3_gate(J);
  Ch3Report rep;
  rep.seed = seed;
  rep.field_floor = J.alg.field.characteristic() == 0 ? "Q, 51-point coefficient range"
                                                      : "GF(p), p >= 5";
  const int n = J.dim();
  int nodd = J.alg.space.dim_odd();
  Envelope<F> env(J.alg, nodd);
  std::mt19937_64 rng(seed);
  for (int d = 0; d < draws; ++d) {
    EnvElem<K> x;
    int oddk = 0;
    for (int i = 0; i < n; ++i) {
      if (J.alg.space.parity[i] == 0) {
        Envelope<F>::add_term(x, {i, 0u}, J.alg.field.random(rng));
      } else {
        Envelope<F>::add_term(x, {i, 1u << oddk}, J.alg.field.random(rng));
        ++oddk;
      }
    }
    EnvElem<K> v = ch3_eval(J, env, x);
    ++rep.draws;
    if (!v.empty()) {
      rep.holds = false;
      auto& [key, c] = *v.begin();
      rep.witness = "draw " + std::to_string(d) + ": coefficient " + J.alg.field.str(c) + " at " +
                    J.alg.space.labels[key.first] + " (x) mask " + std::to_string(key.second);
      break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Divided powers O(1;n) in characteristic 3 and B(Gamma,d)
// ---------------------------------------------------------------------------

inline long binom_mod3(long m, long k) {
  // Lucas' theorem base 3
  long r = 1;
  while (m || k) {
    long md = m % 3, kd = k % 3;
    if (kd > md) return 0;
    // C(md,kd) for md,kd < 3
    static const long small[3][3] = {{1, 0, 0}, {1, 1, 0}, {1, 2, 1}};
    r = (r * small[md][kd]) % 3;
    m /= 3;
    k /= 3;
  }
  return r;
}

template <class F>
struct DividedPowers {
  AlgebraTable<F> gamma;
  SMat<typename F::Elem> d;
  bool d_simple = false;
  std::string d_simple_note;
};

template <class F>
DividedPowers<F> divided_powers_make(int n, F field) {
  using K = typename F::Elem;
  if (field.characteristic() != 3) throw GateError("divided powers O(1;n) require characteristic 3");
  if (n < 1 || n > 7) throw GateError("O(1;n): n must be in 1..7");
  long N = 1;
  for (int i = 0; i < n; ++i) N *= 3;
  SuperSpace s;
  for (long r = 0; r < N; ++r) s.push("t(" + std::to_string(r) + ")", 0);
  AlgebraTable<F> t(field, s);
  for (long r = 0; r < N; ++r)
    for (long q = 0; q < N; ++q) {
      if (r + q >= N) continue;
      long c = binom_mod3(r + q, r);
      if (c) t.set_product(static_cast<int>(r), static_cast<int>(q),
                           SVec<K>::unit(static_cast<int>(r + q), field.of(c)));
    }
  t.unit = SVec<K>::unit(0, field.one());
  DividedPowers<F> dp{std::move(t), SMat<K>(static_cast<int>(N), static_cast<int>(N), 0), false, ""};
  for (long r = 1; r < N; ++r) dp.d.col[r] = SVec<K>::unit(static_cast<int>(r - 1), field.one());
  // d-simplicity by spinning from each basis element (sufficient for O(1;n)).
  dp.d_simple = true;
  for (long g = 0; g < N && dp.d_simple; ++g) {
    RowSpan<K> closure;
    std::vector<SVec<K>> work = {SVec<K>::unit(static_cast<int>(g), field.one())};
    closure.offer(work[0]);
    while (!work.empty()) {
      SVec<K> v = work.back();
      work.pop_back();
      std::vector<SVec<K>> next;
      next.push_back(dp.d.apply(v));
      for (long b = 0; b < N; ++b) next.push_back(dp.gamma.mul(SVec<K>::unit(static_cast<int>(b), field.one()), v));
      for (auto& w : next)
        if (closure.offer(w)) work.push_back(w);
    }
    if (closure.rank() < N) dp.d_simple = false;
  }
  dp.d_simple_note = "basis-generator spinning (sufficient for O(1;n))";
  return dp;
}

// B(Gamma,d) = Gamma + Gamma u:
//   a(bu) = (ab)u = (au)b,   (au)(bu) = a d(b) - d(a) b.
template <class F>
Jordan<F> b_gamma_d_make(const AlgebraTable<F>& gamma, const SMat<typename F::Elem>& d,
                         bool d_simple_verified, const std::string& kindtag) {
  using K = typename F::Elem;
  const F& field = gamma.field;
  if (field.characteristic() != 3) throw GateError("B(Gamma,d) requires characteristic 3");
  const int N = gamma.dim();
  if (!gamma.unit) throw GateError("B(Gamma,d): Gamma must be unital");
  if (d.is_zero()) throw GateError("B(Gamma,d): d-simplicity gate requires d != 0");
  // d must be a derivation of Gamma
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      SVec<K> lhs = d.apply(gamma.product(i, j));
      SVec<K> rhs = gamma.mul(d.col[i], SVec<K>::unit(j, field.one())) +
                    gamma.mul(SVec<K>::unit(i, field.one()), d.col[j]);
      if (!(lhs - rhs).is_zero()) throw GateError("B(Gamma,d): d is not a derivation");
    }
  if (!d_simple_verified) throw GateError("B(Gamma,d): Gamma is not d-simple (or not verified)");

  SuperSpace s;
  for (int r = 0; r < N; ++r) s.push(gamma.space.labels[r], 0);
  for (int r = 0; r < N; ++r) s.push(gamma.space.labels[r] + "u", 1);
  s.validate();
  AlgebraTable<F> t(field, s);
  auto lift = [&](const SVec<K>& v, int off) {
    SVec<K> r;
    for (const auto& [i, c] : v.t) r.add_term(i + off, c);
    return r;
  };
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const SVec<K>& ab = gamma.product(i, j);
      t.set_product(i, j, ab);
      t.set_product(i, j + N, lift(ab, N));
      t.set_product(i + N, j, lift(ab, N));
      // (au)(bu) = a d(b) - d(a) b
      SVec<K> odd = gamma.mul(SVec<K>::unit(i, field.one()), d.col[j]) -
                    gamma.mul(d.col[i], SVec<K>::unit(j, field.one()));
      t.set_product(i + N, j + N, std::move(odd));
    }
  Jordan<F> J(std::move(t));
  J.kind = kindtag;
  J.unit = *gamma.unit;
  J.finish();
  return J;
}

}  // namespace titsforge
