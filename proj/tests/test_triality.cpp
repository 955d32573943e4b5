#include <catch2/catch_amalgamated.hpp>

#include "titsforge/triality.hpp"

using namespace titsforge;

namespace {

template <class F>
TrialityAlgebra<F> tri_of_composition(const Composition<F>& C) {
  auto para = para_hurwitz(C);
  return tri_solve(para.alg, para.norm);
}

template <class F>
bool components_commute_into(const TrialityAlgebra<F>& T) {
  // closure under componentwise supercommutator, all basis pairs
  for (size_t i = 0; i < T.basis.size(); ++i)
    for (size_t j = i; j < T.basis.size(); ++j) {
      TrialityElement<F> c;
      c.parity = (T.basis[i].parity + T.basis[j].parity) & 1;
      c.d0 = super_commutator(T.basis[i].d0, T.basis[j].d0);
      c.d1 = super_commutator(T.basis[i].d1, T.basis[j].d1);
      c.d2 = super_commutator(T.basis[i].d2, T.basis[j].d2);
      c.d0.parity = c.d1.parity = c.d2.parity = c.parity;
      if (!T.member(c)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("osp dimensions") {
  RatField q;
  ModField f3 = make_mod_field(3);
  auto O = hurwitz_make(CompKind::Octonion, q);
  auto ospO = osp_basis(O.alg.space, O.norm, q);
  CHECK(ospO.dim_even == 28);
  CHECK(ospO.dim_odd == 0);
  auto B12 = comp_super_make(CompKind::B12, f3);
  auto osp12 = osp_basis(B12.alg.space, B12.norm, f3);
  CHECK(osp12.dim_even == 3);
  CHECK(osp12.dim_odd == 2);
  auto B42 = comp_super_make(CompKind::B42, f3);
  auto osp42 = osp_basis(B42.alg.space, B42.norm, f3);
  CHECK(osp42.dim_even == 9);
  CHECK(osp42.dim_odd == 8);
  auto U = hurwitz_make(CompKind::Unit, q);
  auto ospU = osp_basis(U.alg.space, U.norm, q);
  CHECK(ospU.mats.empty());
}

TEST_CASE("osp rejects a degenerate form") {
  RatField q;
  auto B = hurwitz_make(CompKind::Binarion, q);
  QForm<RatField> degenerate = B.norm;
  degenerate.bm[0][1] = degenerate.bm[1][0] = q.zero();
  CHECK_THROWS_AS(osp_basis(B.alg.space, degenerate, q), GateError);
}

TEST_CASE("tri dimensions across the Hurwitz kinds and fields") {
  RatField q;
  ModField f7 = make_mod_field(7);
  CHECK(tri_of_composition(hurwitz_make(CompKind::Unit, q)).dim() == 0);
  CHECK(tri_of_composition(hurwitz_make(CompKind::Binarion, q)).dim() == 2);
  CHECK(tri_of_composition(hurwitz_make(CompKind::Quaternion, q)).dim() == 9);
  auto TO = tri_of_composition(hurwitz_make(CompKind::Octonion, q));
  CHECK(TO.dim() == 28);
  CHECK(TO.dim_odd == 0);
  CHECK(tri_of_composition(hurwitz_make(CompKind::Unit, f7)).dim() == 0);
  CHECK(tri_of_composition(hurwitz_make(CompKind::Binarion, f7)).dim() == 2);
  CHECK(tri_of_composition(hurwitz_make(CompKind::Quaternion, f7)).dim() == 9);
  CHECK(tri_of_composition(hurwitz_make(CompKind::Octonion, f7)).dim() == 28);
}

TEST_CASE("tri dimensions for the composition superalgebras") {
  ModField f3 = make_mod_field(3);
  auto B12 = comp_super_make(CompKind::B12, f3);
  auto para12 = para_hurwitz(B12);
  auto T12 = tri_solve(para12.alg, para12.norm);
  CHECK(T12.dim_even == 3);
  CHECK(T12.dim_odd == 2);
  auto B42 = comp_super_make(CompKind::B42, f3);
  auto para42 = para_hurwitz(B42);
  auto T42 = tri_solve(para42.alg, para42.norm);
  CHECK(T42.dim_even == 9);
  CHECK(T42.dim_odd == 8);
  CHECK(components_commute_into(T12));
  CHECK(components_commute_into(T42));
}

TEST_CASE("tri of symmetric handles (okubo, para-Cayley) over GF(7)") {
  ModField f7 = make_mod_field(7);
  auto ok = okubo_make(f7);
  auto Tok = tri_solve(ok.alg, ok.norm);
  CHECK(Tok.dim() == 28);
  auto TparaC = tri_of_composition(hurwitz_make(CompKind::Octonion, f7));
  CHECK(TparaC.dim() == 28);
}

TEST_CASE("tri closure under componentwise bracket") {
  RatField q;
  CHECK(components_commute_into(tri_of_composition(hurwitz_make(CompKind::Quaternion, q))));
  CHECK(components_commute_into(tri_of_composition(hurwitz_make(CompKind::Binarion, q))));
}

TEST_CASE("theta is a tri automorphism of order 3") {
  RatField q;
  auto C = hurwitz_make(CompKind::Octonion, q);
  auto T = tri_of_composition(C);
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    SVec<Rat> coords;
    for (int k = 0; k < T.dim(); ++k) coords.add_term(k, q.random(rng));
    auto t = T.from_coords(coords);
    auto t3 = theta(T, theta(T, theta(T, t)));
    CHECK((t3.d0 - t.d0).is_zero());
    CHECK((t3.d1 - t.d1).is_zero());
    CHECK((t3.d2 - t.d2).is_zero());
  }
  // theta on tri(FxF): matrix of the induced action has order 3
  auto TB = tri_of_composition(hurwitz_make(CompKind::Binarion, q));
  REQUIRE(TB.dim() == 2);
  SMat<Rat> th(2, 2, 0);
  for (int k = 0; k < 2; ++k) th.col[k] = TB.decompose(theta(TB, TB.basis[k]));
  SMat<Rat> th3 = th.compose(th).compose(th);
  CHECK((th3 - SMat<Rat>::identity(2, q.one())).is_zero());
}

TEST_CASE("t_xy membership and spanning") {
  ModField f7 = make_mod_field(7);
  auto C = hurwitz_make(CompKind::Octonion, f7);
  auto para = para_hurwitz(C);
  auto T = tri_solve(para.alg, para.norm);
  RowSpan<Mod> spanned;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      auto t = t_xy(para.alg, para.norm, SVec<Mod>::unit(i, f7.one()), SVec<Mod>::unit(j, f7.one()));
      REQUIRE(tri_member(para.alg, para.norm, t));
      REQUIRE(T.member(t));
      spanned.offer(flatten_triple(t));
      auto th1 = theta(T, t);
      spanned.offer(flatten_triple(th1));
      spanned.offer(flatten_triple(theta(T, th1)));
    }
  CHECK(spanned.rank() == 28);  // theta-orbit of the t_xy spans tri(Cayley)
}

TEST_CASE("sigma_{x,x} vanishes for even x") {
  RatField q;
  auto C = hurwitz_make(CompKind::Octonion, q);
  auto para = para_hurwitz(C);
  SVec<Rat> x = SVec<Rat>::unit(2, q.one());  // u1, isotropic
  auto t = t_xy(para.alg, para.norm, x, x);
  CHECK(t.d0.is_zero());
}

TEST_CASE("conjugated-Hurwitz and symmetric-product t_xy formulas agree") {
  RatField q;
  auto C = hurwitz_make(CompKind::Octonion, q);
  auto para = para_hurwitz(C);
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    SVec<Rat> x, y;
    for (int i = 0; i < 8; ++i) {
      x.add_term(i, q.random(rng));
      y.add_term(i, q.random(rng));
    }
    auto a = t_xy(para.alg, para.norm, x, y);
    auto b = t_xy_hurwitz(C, x, y);
    CHECK((a.d0 - b.d0).is_zero());
    CHECK((a.d1 - b.d1).is_zero());
    CHECK((a.d2 - b.d2).is_zero());
  }
}

TEST_CASE("tri dims are stable across fields of admissible characteristic") {
  ModField f5 = make_mod_field(5), f13 = make_mod_field(13);
  CHECK(tri_of_composition(hurwitz_make(CompKind::Octonion, f5)).dim() == 28);
  CHECK(tri_of_composition(hurwitz_make(CompKind::Octonion, f13)).dim() == 28);
}
