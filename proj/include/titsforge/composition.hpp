// Composition (super)algebras: the four split Hurwitz algebras, B(1,2) and
// B(4,2) in characteristic 3, para-Hurwitz and Okubo symmetric composition
// algebras, inner derivations D_{a,b}, and the composition-identity checker.

#pragma once

#include <array>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "titsforge/algebra.hpp"
#include "titsforge/derivations.hpp"
#include "titsforge/field.hpp"
#include "titsforge/linalg.hpp"

namespace titsforge {

// Render a sparse vector against basis labels ("u1-2*e2" style), for witness
// reports and block labels.
template <class F>
std::string render_vec(const F& field, const SuperSpace& space, const SVec<typename F::Elem>& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v.t) {
    std::string cs = field.str(c);
    if (!first && cs[0] != '-') os << "+";
    if (cs == "1")
      os << space.labels[i];
    else if (cs == "-1")
      os << "-" << space.labels[i];
    else
      os << cs << "*" << space.labels[i];
    first = false;
  }
  return os.str();
}

// Quadratic superform q = (q0, b): q0 on the even part, b its polar form on
// the even part, supersymmetric even bilinear overall.
template <class F>
struct QForm {
  using K = typename F::Elem;
  std::vector<K> q0;               // values on basis (even slots meaningful)
  std::vector<std::vector<K>> bm;  // dense bilinear matrix

  K bil(const SVec<K>& x, const SVec<K>& y) const {
    K r;
    for (const auto& [i, a] : x.t)
      for (const auto& [j, b] : y.t) r += a * bm[i][j] * b;
    return r;
  }

  // q0 of an even vector: sum v_i^2 q0(b_i) + sum_{i<j} v_i v_j b(b_i,b_j).
  K quad(const SVec<K>& v) const {
    K r;
    for (size_t a = 0; a < v.t.size(); ++a) {
      const auto& [i, vi] = v.t[a];
      r += vi * vi * q0[i];
      for (size_t b = a + 1; b < v.t.size(); ++b) {
        const auto& [j, vj] = v.t[b];
        r += vi * vj * bm[i][j];
      }
    }
    return r;
  }

  int rank(const K& one) const {
    RowSpan<K> span;
    for (const auto& row : bm) {
      SVec<K> r;
      for (size_t j = 0; j < row.size(); ++j) r.add_term(static_cast<int>(j), row[j]);
      span.offer(r);
    }
    (void)one;
    return span.rank();
  }
};

enum class CompKind { Unit, Binarion, Quaternion, Octonion, B12, B42 };

inline std::string comp_kind_name(CompKind k) {
  switch (k) {
    case CompKind::Unit: return "unit";
    case CompKind::Binarion: return "binarion";
    case CompKind::Quaternion: return "quaternion";
    case CompKind::Octonion: return "octonion";
    case CompKind::B12: return "b12";
    case CompKind::B42: return "b42";
  }
  return "?";
}

template <class F>
struct Composition {
  using K = typename F::Elem;

  AlgebraTable<F> alg;
  QForm<F> norm;
  SVec<K> unit;
  CompKind kind;

  std::vector<SVec<K>> c0;  // trace-zero basis, deterministic kernel order
  RowSpan<K> c0_span{true};

  explicit Composition(AlgebraTable<F> a) : alg(std::move(a)) {}

  int dim() const { return alg.dim(); }

  K trace_of(const SVec<K>& x) const { return norm.bil(x, unit); }

  SVec<K> conj(const SVec<K>& x) const { return unit.scaled(trace_of(x)) - x; }

  // para-Hurwitz product x.y = conj(x) conj(y)
  SVec<K> para(const SVec<K>& x, const SVec<K>& y) const { return alg.mul(conj(x), conj(y)); }

  void finish() {
    alg.unit = unit;
    // trace functional row -> kernel = C^0
    std::vector<SVec<K>> row(1);
    for (int i = 0; i < dim(); ++i) row[0].add_term(i, norm.bil(SVec<K>::unit(i, alg.field.one()), unit));
    c0 = solve_linear(row, dim(), alg.field.one()).kernel;
    for (const auto& v : c0) c0_span.offer(v);
  }
};

namespace detail {

template <class F>
AlgebraTable<F> table_from_rule(F field, SuperSpace space,
                                const std::function<SVec<typename F::Elem>(int, int)>& rule) {
  AlgebraTable<F> t(std::move(field), std::move(space));
  const int n = t.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.set_product(i, j, rule(i, j));
  return t;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Split Hurwitz algebras
// ---------------------------------------------------------------------------

template <class F>
Composition<F> hurwitz_make(CompKind kind, F field) {
  using K = typename F::Elem;
  if (field.characteristic() == 2) throw GateError("characteristic 2 excluded");
  const K one = field.one();

  if (kind == CompKind::Unit) {
    SuperSpace s = SuperSpace::make({{"1", 0}});
    Composition<F> C(detail::table_from_rule<F>(field, s, [&](int, int) { return SVec<K>::unit(0, one); }));
    C.kind = kind;
    C.unit = SVec<K>::unit(0, one);
    C.norm.q0 = {one};
    C.norm.bm = {{field.of(2)}};
    C.finish();
    return C;
  }

  if (kind == CompKind::Binarion) {
    SuperSpace s = SuperSpace::make({{"p1", 0}, {"p2", 0}});
    Composition<F> C(detail::table_from_rule<F>(field, s, [&](int i, int j) {
      return i == j ? SVec<K>::unit(i, one) : SVec<K>();
    }));
    C.kind = kind;
    C.unit = SVec<K>::unit(0, one) + SVec<K>::unit(1, one);
    C.norm.q0 = {field.zero(), field.zero()};
    C.norm.bm = {{field.zero(), one}, {one, field.zero()}};
    C.finish();
    return C;
  }

  if (kind == CompKind::Quaternion) {
    // Matrix units E11,E12,E21,E22 with the determinant norm.
    SuperSpace s = SuperSpace::make({{"E11", 0}, {"E12", 0}, {"E21", 0}, {"E22", 0}});
    auto row = [](int k) { return k / 2; };
    auto colm = [](int k) { return k % 2; };
    Composition<F> C(detail::table_from_rule<F>(field, s, [&](int i, int j) {
      if (colm(i) != row(j)) return SVec<K>();
      return SVec<K>::unit(row(i) * 2 + colm(j), one);
    }));
    C.kind = kind;
    C.unit = SVec<K>::unit(0, one) + SVec<K>::unit(3, one);
    C.norm.q0 = std::vector<K>(4, field.zero());
    C.norm.bm.assign(4, std::vector<K>(4, field.zero()));
    C.norm.bm[0][3] = C.norm.bm[3][0] = one;
    C.norm.bm[1][2] = C.norm.bm[2][1] = -one;
    C.finish();
    return C;
  }

  if (kind == CompKind::Octonion) {
    // Zorn vector matrices (alpha, a; b, beta) with basis e1,e2,u1..u3,v1..v3
    // and norm alpha*beta - a.b.
    SuperSpace s = SuperSpace::make(
        {{"e1", 0}, {"e2", 0}, {"u1", 0}, {"u2", 0}, {"u3", 0}, {"v1", 0}, {"v2", 0}, {"v3", 0}});
    auto rule = [&](int i, int j) -> SVec<K> {
      SVec<K> r;
      auto add = [&](int k, long c) { r.add_term(k, field.of(c)); };
      const bool ie1 = (i == 0), ie2 = (i == 1), je1 = (j == 0), je2 = (j == 1);
      const bool iu = (i >= 2 && i <= 4), iv = (i >= 5), ju = (j >= 2 && j <= 4), jv = (j >= 5);
      const int a = iu ? i - 2 : (iv ? i - 5 : -1);
      const int b = ju ? j - 2 : (jv ? j - 5 : -1);
      if (ie1 && je1) add(0, 1);
      else if (ie2 && je2) add(1, 1);
      else if (ie1 && ju) add(j, 1);       // e1 u = u
      else if (iu && je2) add(i, 1);       // u e2 = u
      else if (ie2 && jv) add(j, 1);       // e2 v = v
      else if (iv && je1) add(i, 1);       // v e1 = v
      else if (iu && ju) {                 // u_a u_b = eps_{abc} v_c
        if (a != b) {
          int c = 3 - a - b;
          int sign = ((b - a + 3) % 3 == 1) ? 1 : -1;
          add(5 + c, sign);
        }
      } else if (iv && jv) {               // v_a v_b = -eps_{abc} u_c
        if (a != b) {
          int c = 3 - a - b;
          int sign = ((b - a + 3) % 3 == 1) ? 1 : -1;
          add(2 + c, -sign);
        }
      } else if (iu && jv) {               // u_a v_b = delta_ab e1
        if (a == b) add(0, 1);
      } else if (iv && ju) {               // v_a u_b = delta_ab e2
        if (a == b) add(1, 1);
      }
      return r;
    };
    Composition<F> C(detail::table_from_rule<F>(field, s, rule));
    C.kind = kind;
    C.unit = SVec<K>::unit(0, one) + SVec<K>::unit(1, one);
    C.norm.q0 = std::vector<K>(8, field.zero());
    C.norm.bm.assign(8, std::vector<K>(8, field.zero()));
    C.norm.bm[0][1] = C.norm.bm[1][0] = one;
    for (int k = 0; k < 3; ++k) C.norm.bm[2 + k][5 + k] = C.norm.bm[5 + k][2 + k] = -one;
    C.finish();
    return C;
  }

  throw GateError("comp_super_make handles B(1,2)/B(4,2)");
}

// ---------------------------------------------------------------------------
// Composition superalgebras B(1,2), B(4,2) (characteristic 3 only)
// ---------------------------------------------------------------------------

template <class F>
Composition<F> comp_super_make(CompKind kind, F field) {
  using K = typename F::Elem;
  if (field.characteristic() != 3)
    throw GateError(comp_kind_name(kind) + " requires characteristic 3");
  const K one = field.one();

  if (kind == CompKind::B12) {
    SuperSpace s = SuperSpace::make({{"1", 0}, {"v1", 1}, {"v2", 1}});
    auto rule = [&](int i, int j) -> SVec<K> {
      if (i == 0) return SVec<K>::unit(j, one);
      if (j == 0) return SVec<K>::unit(i, one);
      if (i == 1 && j == 2) return SVec<K>::unit(0, one);
      if (i == 2 && j == 1) return SVec<K>::unit(0, -one);
      return {};
    };
    Composition<F> C(detail::table_from_rule<F>(field, s, rule));
    C.kind = kind;
    C.unit = SVec<K>::unit(0, one);
    C.norm.q0 = {one, field.zero(), field.zero()};
    C.norm.bm.assign(3, std::vector<K>(3, field.zero()));
    C.norm.bm[0][0] = field.of(2);
    C.norm.bm[1][2] = one;
    C.norm.bm[2][1] = -one;
    C.finish();
    return C;
  }

  if (kind == CompKind::B42) {
    // End(V) (+) V with <v1|v2> = 1; f_ij maps v_j to v_i.
    SuperSpace s = SuperSpace::make({{"f11", 0}, {"f12", 0}, {"f21", 0}, {"f22", 0}, {"v1", 1}, {"v2", 1}});
    // symplectic involution on End(V): bar f = tr(f) id - f
    auto rule = [&](int i, int j) -> SVec<K> {
      SVec<K> r;
      if (i < 4 && j < 4) {  // composition of maps
        int ri = i / 2, ci = i % 2, rj = j / 2, cj = j % 2;
        if (ci == rj) r.add_term(ri * 2 + cj, one);
        return r;
      }
      if (i >= 4 && j < 4) {  // v . f = f(v)
        int k = i - 4, rj = j / 2, cj = j % 2;
        if (cj == k) r.add_term(4 + rj, one);
        return r;
      }
      if (i < 4 && j >= 4) {  // f . v = bar f (v)
        int k = j - 4, ri = i / 2, ci = i % 2;
        // bar f_{ri ci} = tr(f) id - f = delta_{ri,ci} id - f_{ri ci}
        if (ri == ci) r.add_term(4 + k, one);        // tr part
        if (ci == k) r.add_term(4 + ri, -one);       // -f part
        return r;
      }
      // u . v = <.|u> v : w -> <w|u> v, with <v1|v2> = 1 and f_{ij}: v_j -> v_i
      int a = i - 4, b = j - 4;
      if (a == 0) r.add_term(b * 2 + 1, -one);  // v_a = v1: v2 -> -v_b, i.e. -f_{b,1}
      else r.add_term(b * 2, one);              // v_a = v2: v1 -> +v_b, i.e. +f_{b,0}
      return r;
    };
    Composition<F> C(detail::table_from_rule<F>(field, s, rule));
    C.kind = kind;
    C.unit = SVec<K>::unit(0, one) + SVec<K>::unit(3, one);
    C.norm.q0 = {field.zero(), field.zero(), field.zero(), field.zero(), field.zero(), field.zero()};
    C.norm.bm.assign(6, std::vector<K>(6, field.zero()));
    // b(f,g) = tr(f)tr(g) - tr(fg) on End(V)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        int ri = i / 2, ci = i % 2, rj = j / 2, cj = j % 2;
        K v = field.zero();
        if (ri == ci && rj == cj) v += one;
        if (ci == rj && cj == ri) v -= one;
        C.norm.bm[i][j] = v;
      }
    C.norm.bm[4][5] = one;
    C.norm.bm[5][4] = -one;
    C.finish();
    return C;
  }

  throw GateError("hurwitz_make handles the unital Hurwitz kinds");
}

// ---------------------------------------------------------------------------
// Inner derivations D_{a,b}(c) = [[a,b],c] + 3(a,c,b)
// ---------------------------------------------------------------------------

template <class F>
SMat<typename F::Elem> inner_derivation(const Composition<F>& C, const SVec<typename F::Elem>& a,
                                        const SVec<typename F::Elem>& b) {
  using K = typename F::Elem;
  const auto& A = C.alg;
  auto pa = A.parity_of(a), pb = A.parity_of(b);
  if (!a.is_zero() && !pa) throw GateError("D_{a,b}: a must be homogeneous");
  if (!b.is_zero() && !pb) throw GateError("D_{a,b}: b must be homogeneous");
  int qa = pa.value_or(0), qb = pb.value_or(0);
  // super commutator [a,b]
  SVec<K> ab = A.mul(a, b);
  SVec<K> ba = A.mul(b, a);
  SVec<K> comm = (qa & qb) ? ab + ba : ab - ba;
  const K three = A.field.of(3);
  SMat<K> m(A.dim(), A.dim(), (qa + qb) & 1);
  for (int c = 0; c < A.dim(); ++c) {
    SVec<K> ec = SVec<K>::unit(c, A.field.one());
    // [[a,b],c] with |[a,b]| = qa+qb
    SVec<K> t1 = A.mul(comm, ec);
    SVec<K> t2 = A.mul(ec, comm);
    SVec<K> r = (((qa + qb) & 1) && A.space.parity[c]) ? t1 + t2 : t1 - t2;
    // + 3 (a,c,b) = 3((ac)b - a(cb))
    r.axpy(three, A.mul(A.mul(a, ec), b));
    r.axpy(-three, A.mul(a, A.mul(ec, b)));
    m.col[c] = std::move(r);
  }
  return m;
}

template <class F>
DerivationSpan<typename F::Elem> inder_comp_basis(const Composition<F>& C) {
  using K = typename F::Elem;
  DerivationSpan<K> d;
  const int n = C.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (i == j && !(C.alg.space.parity[i] && C.alg.space.parity[j])) continue;  // D_{a,a}=0 for even a
      SMat<K> m = inner_derivation(C, SVec<K>::unit(i, C.alg.field.one()),
                                   SVec<K>::unit(j, C.alg.field.one()));
      if (m.is_zero()) continue;
      d.offer(m, "D(" + C.alg.space.labels[i] + "," + C.alg.space.labels[j] + ")");
    }
  return d;
}

// ---------------------------------------------------------------------------
// Symmetric composition algebras
// ---------------------------------------------------------------------------

template <class F>
struct SymmetricComposition {
  using K = typename F::Elem;
  AlgebraTable<F> alg;  // the * (bullet) product; generally non-unital
  QForm<F> norm;
  std::string provenance;
  std::optional<K> okubo_mu;

  explicit SymmetricComposition(AlgebraTable<F> a) : alg(std::move(a)) {}
  int dim() const { return alg.dim(); }
};

template <class F>
SymmetricComposition<F> para_hurwitz(const Composition<F>& C) {
  AlgebraTable<F> t(C.alg.field, C.alg.space);
  const int n = C.dim();
  using K = typename F::Elem;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t.set_product(i, j, C.para(SVec<K>::unit(i, C.alg.field.one()), SVec<K>::unit(j, C.alg.field.one())));
  SymmetricComposition<F> s(std::move(t));
  s.norm = C.norm;
  s.provenance = "para:" + comp_kind_name(C.kind);
  return s;
}

// Okubo algebra on trace-zero 3x3 matrices: x*y = mu xy + (1-mu) yx - tr(xy)/3,
// with 3 mu (1-mu) = 1 and n(x) = tr(x^2)/6.
template <class F>
SymmetricComposition<F> okubo_make(F field) {
  using K = typename F::Elem;
  long p = field.characteristic();
  if (p == 3) throw GateError("Okubo algebras in characteristic 3 need a different definition (out of scope)");
  if (p == 2) throw GateError("characteristic 2 excluded");
  std::optional<K> mu;
  if (p == 0) {
    throw GateError("okubo: 3X(1-X)=1 has no rational root (discriminant -3 is not a square in Q)");
  }
  // lexicographically smallest root of 3X^2 - 3X + 1 = 0 in 0..p-1
  for (long r = 0; r < p; ++r) {
    K x = field.of(r);
    if ((field.of(3) * x * (field.one() - x)) == field.one()) {
      mu = x;
      break;
    }
  }
  if (!mu)
    throw GateError("okubo: 3X(1-X)=1 has no root in GF(" + std::to_string(p) +
                    ") (requires p = 1 mod 3)");

  // sl3 basis as integer matrices
  struct M3 {
    std::array<std::array<long, 3>, 3> a{};
  };
  auto E = [](int i, int j) {
    M3 m;
    m.a[i][j] = 1;
    return m;
  };
  auto sub = [](M3 x, const M3& y) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) x.a[i][j] -= y.a[i][j];
    return x;
  };
  std::vector<M3> basis = {E(0, 1), E(0, 2), E(1, 0), E(1, 2), E(2, 0), E(2, 1),
                           sub(E(0, 0), E(1, 1)), sub(E(1, 1), E(2, 2))};
  std::vector<std::string> names = {"E12", "E13", "E21", "E23", "E31", "E32", "H1", "H2"};
  SuperSpace s;
  for (auto& nm : names) s.push(nm, 0);

  auto matmul = [](const M3& x, const M3& y) {
    M3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        long v = 0;
        for (int k = 0; k < 3; ++k) v += x.a[i][k] * y.a[k][j];
        r.a[i][j] = v;
      }
    return r;
  };
  auto tr = [](const M3& x) { return x.a[0][0] + x.a[1][1] + x.a[2][2]; };

  AlgebraTable<F> t(field, s);
  const K inv3 = field.of(3).inv();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      M3 xy = matmul(basis[i], basis[j]);
      M3 yx = matmul(basis[j], basis[i]);
      K trpart = field.of(tr(xy)) * inv3;
      // M = mu*xy + (1-mu)*yx - tr(xy)/3 * id, entrywise over K.
      std::array<std::array<K, 3>, 3> M;
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
          M[r][c] = *mu * field.of(xy.a[r][c]) + (field.one() - *mu) * field.of(yx.a[r][c]);
          if (r == c) M[r][c] -= trpart;
        }
      if (!(M[0][0] + M[1][1] + M[2][2]).is_zero()) throw std::logic_error("okubo product not traceless");
      SVec<K> v;
      auto add = [&](int idx, const K& c) {
        if (!c.is_zero()) v.add_term(idx, c);
      };
      add(0, M[0][1]);
      add(1, M[0][2]);
      add(2, M[1][0]);
      add(3, M[1][2]);
      add(4, M[2][0]);
      add(5, M[2][1]);
      add(6, M[0][0]);               // coeff of H1
      add(7, M[0][0] + M[1][1]);     // coeff of H2
      t.set_product(i, j, std::move(v));
    }
  SymmetricComposition<F> sc(std::move(t));
  sc.okubo_mu = mu;
  sc.provenance = "okubo(mu=" + field.str(*mu) + ")";
  const K inv6 = field.of(6).inv();
  sc.norm.q0.assign(8, field.zero());
  sc.norm.bm.assign(8, std::vector<K>(8, field.zero()));
  for (int i = 0; i < 8; ++i) {
    sc.norm.q0[i] = field.of(tr(matmul(basis[i], basis[i]))) * inv6;
    for (int j = 0; j < 8; ++j) sc.norm.bm[i][j] = field.of(tr(matmul(basis[i], basis[j]))) * inv3;
  }
  return sc;
}

// ---------------------------------------------------------------------------
// Identity checking
// ---------------------------------------------------------------------------

struct CompCheckReport {
  bool qc1 = true, qc2 = true, qc3 = true, degree2 = true;
  std::string witness;  // first failure, if any
  bool pass() const { return qc1 && qc2 && qc3 && degree2; }
};

template <class F>
CompCheckReport check_composition(const Composition<F>& C, unsigned seed = 1729) {
  using K = typename F::Elem;
  CompCheckReport rep;
  const auto& A = C.alg;
  const int n = A.dim();
  auto unit_vec = [&](int i) { return SVec<K>::unit(i, A.field.one()); };
  auto fail = [&](bool& flag, const std::string& w) {
    if (rep.pass()) rep.witness = w;
    flag = false;
  };
  // qcompo1 on even basis pairs
  for (int i = 0; i < n && rep.qc1; ++i)
    for (int j = 0; j < n; ++j) {
      if (A.space.parity[i] || A.space.parity[j]) continue;
      if (!(C.norm.quad(A.product(i, j)) - C.norm.quad(unit_vec(i)) * C.norm.quad(unit_vec(j))).is_zero()) {
        fail(rep.qc1, "qcompo1 at (" + A.space.labels[i] + "," + A.space.labels[j] + ")");
        break;
      }
    }
  // qcompo2: b(x0 y, x0 z) = q0(x0) b(y,z) = b(y x0, z x0), x0 even
  for (int i = 0; i < n && rep.qc2; ++i) {
    if (A.space.parity[i]) continue;
    K qi = C.norm.q0[i];
    for (int y = 0; y < n && rep.qc2; ++y)
      for (int z = 0; z < n; ++z) {
        K lhs = C.norm.bil(A.product(i, y), A.product(i, z));
        K mid = qi * C.norm.bm[y][z];
        K rhs = C.norm.bil(A.product(y, i), A.product(z, i));
        if (!(lhs - mid).is_zero() || !(rhs - mid).is_zero()) {
          fail(rep.qc2, "qcompo2 at (" + A.space.labels[i] + ";" + A.space.labels[y] + "," +
                            A.space.labels[z] + ")");
          break;
        }
      }
  }
  // qcompo3: b(xy,zt) + (-1)^{xy+xz+yz} b(zy,xt) = (-1)^{yz} b(x,z) b(y,t)
  for (int x = 0; x < n && rep.qc3; ++x)
    for (int y = 0; y < n && rep.qc3; ++y)
      for (int z = 0; z < n && rep.qc3; ++z)
        for (int w = 0; w < n; ++w) {
          int px = A.space.parity[x], py = A.space.parity[y], pz = A.space.parity[z];
          K lhs = C.norm.bil(A.product(x, y), A.product(z, w));
          K sec = C.norm.bil(A.product(z, y), A.product(x, w));
          if ((px * py + px * pz + py * pz) & 1) lhs -= sec;
          else lhs += sec;
          K rhs = C.norm.bm[x][z] * C.norm.bm[y][w];
          if ((py * pz) & 1) rhs = -rhs;
          if (!(lhs - rhs).is_zero()) {
            fail(rep.qc3, "qcompo3 at (" + A.space.labels[x] + "," + A.space.labels[y] + "," +
                              A.space.labels[z] + "," + A.space.labels[w] + ")");
            break;
          }
        }
  // degree-2 equation on even basis elements and 100 random even elements
  std::mt19937_64 rng(seed);
  auto deg2 = [&](const SVec<K>& a) {
    SVec<K> lhs = A.mul(a, a) - a.scaled(C.trace_of(a)) + C.unit.scaled(C.norm.quad(a));
    return lhs.is_zero();
  };
  for (int i = 0; i < n && rep.degree2; ++i) {
    if (A.space.parity[i]) continue;
    if (!deg2(unit_vec(i))) fail(rep.degree2, "degree-2 at basis " + A.space.labels[i]);
  }
  for (int trial = 0; trial < 100 && rep.degree2; ++trial) {
    SVec<K> a;
    for (int i = 0; i < n; ++i)
      if (!A.space.parity[i]) a.add_term(i, A.field.random(rng));
    if (!deg2(a)) fail(rep.degree2, "degree-2 at random even element");
  }
  return rep;
}

struct SymCheckReport {
  bool norm_assoc = true, multiplicative = true;
  std::string witness;
  bool pass() const { return norm_assoc && multiplicative; }
};

template <class F>
SymCheckReport check_symmetric(const SymmetricComposition<F>& S, unsigned seed = 1729) {
  using K = typename F::Elem;
  SymCheckReport rep;
  const auto& A = S.alg;
  const int n = A.dim();
  for (int x = 0; x < n && rep.norm_assoc; ++x)
    for (int y = 0; y < n && rep.norm_assoc; ++y)
      for (int z = 0; z < n; ++z) {
        K lhs = S.norm.bil(A.product(x, y), SVec<K>::unit(z, A.field.one()));
        K rhs = S.norm.bil(SVec<K>::unit(x, A.field.one()), A.product(y, z));
        if (!(lhs - rhs).is_zero()) {
          rep.norm_assoc = false;
          rep.witness = "n(x*y,z)=n(x,y*z) fails at (" + A.space.labels[x] + "," + A.space.labels[y] +
                        "," + A.space.labels[z] + ")";
          break;
        }
      }
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 200 && rep.multiplicative; ++trial) {
    SVec<K> a, b;
    for (int i = 0; i < n; ++i)
      if (!A.space.parity[i]) {
        a.add_term(i, A.field.random(rng));
        b.add_term(i, A.field.random(rng));
      }
    K lhs = S.norm.quad(A.mul(a, b));
    K rhs = S.norm.quad(a) * S.norm.quad(b);
    if (!(lhs - rhs).is_zero()) {
      rep.multiplicative = false;
      rep.witness = "n(x*y)=n(x)n(y) fails on a random even pair";
    }
  }
  return rep;
}

}  // namespace titsforge
