#include <catch2/catch_amalgamated.hpp>

#include "titsforge/composition.hpp"

using namespace titsforge;

namespace {
template <class F>
SVec<typename F::Elem> bv(const F& f, int i) {
  return SVec<typename F::Elem>::unit(i, f.one());
}
}  // namespace

TEST_CASE("hurwitz dimensions and trace-zero parts") {
  ModField f7 = make_mod_field(7);
  auto O = hurwitz_make(CompKind::Octonion, f7);
  CHECK(O.dim() == 8);
  CHECK(O.c0.size() == 7);

  RatField q;
  auto U = hurwitz_make(CompKind::Unit, q);
  CHECK(U.dim() == 1);
  CHECK(U.c0.empty());
  // t_C(1) = n(1,1) = 2, and 1^2 - 2*1 + n(1) 1 = 0
  CHECK(U.trace_of(U.unit) == q.of(2));

  auto B = hurwitz_make(CompKind::Binarion, q);
  CHECK(B.dim() == 2);
  CHECK(B.c0.size() == 1);
  auto Q = hurwitz_make(CompKind::Quaternion, q);
  CHECK(Q.dim() == 4);
  CHECK(Q.c0.size() == 3);
}

TEST_CASE("quaternion norm is det") {
  RatField q;
  auto Q = hurwitz_make(CompKind::Quaternion, q);
  CHECK(Q.norm.quad(bv(q, 0)).is_zero());              // n(E11) = 0
  CHECK(Q.norm.bil(bv(q, 0), bv(q, 3)) == q.one());    // n(E11,E22) = 1
  CHECK(Q.norm.bil(bv(q, 1), bv(q, 2)) == q.of(-1));   // n(E12,E21) = -1
}

TEST_CASE("all handles satisfy the composition identities") {
  RatField q;
  ModField f3 = make_mod_field(3), f7 = make_mod_field(7);
  for (auto kind : {CompKind::Unit, CompKind::Binarion, CompKind::Quaternion, CompKind::Octonion}) {
    CHECK(check_composition(hurwitz_make(kind, q)).pass());
    CHECK(check_composition(hurwitz_make(kind, f7)).pass());
    CHECK(check_composition(hurwitz_make(kind, f3)).pass());
  }
  CHECK(check_composition(comp_super_make(CompKind::B12, f3)).pass());
  CHECK(check_composition(comp_super_make(CompKind::B42, f3)).pass());
}

TEST_CASE("conjugation is an involution; unit laws hold") {
  RatField q;
  for (auto kind : {CompKind::Unit, CompKind::Binarion, CompKind::Quaternion, CompKind::Octonion}) {
    auto C = hurwitz_make(kind, q);
    CHECK(C.alg.is_unital_with(C.unit));
    for (int i = 0; i < C.dim(); ++i) {
      auto x = bv(q, i);
      CHECK(C.conj(C.conj(x)) == x);
    }
  }
}

TEST_CASE("norm multiplicativity on random even pairs") {
  RatField q;
  std::mt19937_64 rng(7);
  for (auto kind : {CompKind::Quaternion, CompKind::Octonion}) {
    auto C = hurwitz_make(kind, q);
    for (int t = 0; t < 200; ++t) {
      SVec<Rat> a, b;
      for (int i = 0; i < C.dim(); ++i) {
        a.add_term(i, q.random(rng));
        b.add_term(i, q.random(rng));
      }
      CHECK((C.norm.quad(C.alg.mul(a, b)) - C.norm.quad(a) * C.norm.quad(b)).is_zero());
    }
  }
}

TEST_CASE("corrupted table fails qcompo3 with a witness") {
  RatField q;
  auto C = hurwitz_make(CompKind::Octonion, q);
  SVec<Rat> v = C.alg.product(2, 5);
  v.add_term(0, q.one());
  C.alg.set_product(2, 5, v);
  auto rep = check_composition(C);
  CHECK_FALSE(rep.qc3);
  CHECK_FALSE(rep.witness.empty());
}

TEST_CASE("composition superalgebra gating") {
  ModField f5 = make_mod_field(5);
  CHECK_THROWS_AS(comp_super_make(CompKind::B12, f5), GateError);
  CHECK_THROWS_AS(comp_super_make(CompKind::B42, f5), GateError);
}

TEST_CASE("B(1,2) products") {
  ModField f3 = make_mod_field(3);
  auto B = comp_super_make(CompKind::B12, f3);
  CHECK(B.alg.product(1, 2) == bv(f3, 0));            // v1 v2 = 1
  CHECK(B.alg.product(2, 1) == bv(f3, 0).negated());  // v2 v1 = -1
  CHECK(B.alg.space.dim_even() == 1);
  CHECK(B.alg.space.dim_odd() == 2);
}

TEST_CASE("B(4,2) products: v1 . v2 is the rank-one map and q0(id)=1") {
  ModField f3 = make_mod_field(3);
  auto B = comp_super_make(CompKind::B42, f3);
  // v1 . v2 = <.|v1> v2 = map v2 -> -v2, i.e. -f22
  CHECK(B.alg.product(4, 5) == bv(f3, 3).negated());  // -f22
  CHECK(B.norm.quad(B.unit) == f3.one());
  CHECK(B.alg.is_unital_with(B.unit));
  CHECK(B.alg.space.dim_even() == 4);
  CHECK(B.alg.space.dim_odd() == 2);
}

TEST_CASE("inner derivations: basic identities") {
  RatField q;
  auto O = hurwitz_make(CompKind::Octonion, q);
  // D_{1,b} = 0
  for (int j = 0; j < 8; ++j) CHECK(inner_derivation(O, O.unit, bv(q, j)).is_zero());
  // antisymmetry and the cyclic relation D_{ab,c} + D_{bc,a} + D_{ca,b} = 0
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    SVec<Rat> a, b, c;
    for (int i = 0; i < 8; ++i) {
      a.add_term(i, q.random(rng));
      b.add_term(i, q.random(rng));
      c.add_term(i, q.random(rng));
    }
    CHECK((inner_derivation(O, a, b) + inner_derivation(O, b, a)).is_zero());
    SMat<Rat> cyc = inner_derivation(O, O.alg.mul(a, b), c) + inner_derivation(O, O.alg.mul(b, c), a) +
                    inner_derivation(O, O.alg.mul(c, a), b);
    CHECK(cyc.is_zero());
  }
}

template <class F>
static void check_derivation_property(const Composition<F>& C) {
  using K = typename F::Elem;
  const auto& A = C.alg;
  int n = A.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SVec<K> a = SVec<K>::unit(i, A.field.one()), b = SVec<K>::unit(j, A.field.one());
      SMat<K> D = inner_derivation(C, a, b);
      int pd = D.parity;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          // super-Leibniz: D(xy) = D(x)y + (-1)^{|D||x|} x D(y)
          SVec<K> lhs = D.apply(A.product(x, y));
          SVec<K> rhs = A.mul(D.col[x], SVec<K>::unit(y, A.field.one()));
          SVec<K> t2 = A.mul(SVec<K>::unit(x, A.field.one()), D.col[y]);
          if (pd && A.space.parity[x]) rhs -= t2;
          else rhs += t2;
          CHECK((lhs - rhs).is_zero());
          // D in so/osp: b(Dx,y) + (-1)^{|D||x|} b(x,Dy) = 0
          K s1 = C.norm.bil(D.col[x], SVec<K>::unit(y, A.field.one()));
          K s2 = C.norm.bil(SVec<K>::unit(x, A.field.one()), D.col[y]);
          K tot = (pd && A.space.parity[x]) ? s1 - s2 : s1 + s2;
          CHECK(tot.is_zero());
        }
    }
}

TEST_CASE("D_{a,b} is always a derivation lying in osp(C,n)") {
  RatField q;
  ModField f3 = make_mod_field(3);
  check_derivation_property(hurwitz_make(CompKind::Quaternion, q));
  check_derivation_property(hurwitz_make(CompKind::Octonion, q));
  check_derivation_property(comp_super_make(CompKind::B12, f3));
  check_derivation_property(comp_super_make(CompKind::B42, f3));
}

TEST_CASE("inder dimensions") {
  RatField q;
  ModField f3 = make_mod_field(3), f7 = make_mod_field(7);
  CHECK(inder_comp_basis(hurwitz_make(CompKind::Octonion, f7)).dim() == 14);  // G2
  CHECK(inder_comp_basis(hurwitz_make(CompKind::Octonion, q)).dim() == 14);
  CHECK(inder_comp_basis(hurwitz_make(CompKind::Octonion, f3)).dim() == 7);   // psl3 in char 3
  CHECK(inder_comp_basis(hurwitz_make(CompKind::Binarion, q)).dim() == 0);
  CHECK(inder_comp_basis(hurwitz_make(CompKind::Quaternion, q)).dim() == 3);
}

TEST_CASE("Mat2: D_{a,b} = ad_{[a,b]}") {
  RatField q;
  auto Q = hurwitz_make(CompKind::Quaternion, q);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    SVec<Rat> a, b;
    for (int i = 0; i < 4; ++i) {
      a.add_term(i, q.random(rng));
      b.add_term(i, q.random(rng));
    }
    SMat<Rat> D = inner_derivation(Q, a, b);
    SVec<Rat> comm = Q.alg.mul(a, b) - Q.alg.mul(b, a);
    for (int c = 0; c < 4; ++c) {
      SVec<Rat> ec = SVec<Rat>::unit(c, q.one());
      SVec<Rat> ad = Q.alg.mul(comm, ec) - Q.alg.mul(ec, comm);
      CHECK((D.col[c] - ad).is_zero());
    }
  }
}

TEST_CASE("para-Hurwitz") {
  RatField q;
  auto U = hurwitz_make(CompKind::Unit, q);
  auto pu = para_hurwitz(U);
  CHECK(pu.alg.product(0, 0) == SVec<Rat>::unit(0, q.one()));  // 1.1 = 1

  auto O = hurwitz_make(CompKind::Octonion, q);
  auto pO = para_hurwitz(O);
  CHECK(check_symmetric(pO).pass());  // includes all 512 norm-associativity triples
  // generally non-unital: no e with e*x = x for all x -> inconsistent system
  // unknowns e_i: for each (j,k): sum_i e_i prod(i,j)[k] = delta_{jk}
  std::vector<SVec<Rat>> rows;
  SVec<Rat> rhs;
  int n = 8, eq = 0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k, ++eq) {
      SVec<Rat> row;
      for (int i = 0; i < n; ++i) row.add_term(i, pO.alg.product(i, j).get(k));
      rows.push_back(row);
      if (j == k) rhs.add_term(eq, q.one());
    }
  CHECK_FALSE(solve_linear(rows, n, q.one(), rhs).consistent);
}

TEST_CASE("okubo") {
  RatField q;
  CHECK_THROWS_AS(okubo_make(q), GateError);
  CHECK_THROWS_AS(okubo_make(make_mod_field(5)), GateError);   // 5 = 2 mod 3
  CHECK_THROWS_AS(okubo_make(make_mod_field(3)), GateError);   // out of scope
  ModField f7 = make_mod_field(7);
  auto O = okubo_make(f7);
  REQUIRE(O.okubo_mu.has_value());
  CHECK(*O.okubo_mu == f7.of(2));  // smallest root: 3*2*(1-2) = -6 = 1 mod 7
  CHECK(O.dim() == 8);
  CHECK(check_symmetric(O).pass());
  ModField f13 = make_mod_field(13);
  CHECK(check_symmetric(okubo_make(f13)).pass());
}
