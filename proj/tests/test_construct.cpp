#include <catch2/catch_amalgamated.hpp>

#include "titsforge/construct.hpp"

using namespace titsforge;

TEST_CASE("Tits magic-square column H3(F): dims 3, 8, 21, 52") {
  RatField q;
  auto J = h3_make(hurwitz_make(CompKind::Unit, q));
  auto T1 = tits_build(hurwitz_make(CompKind::Unit, q), J);
  CHECK(T1.dim() == 3);
  CHECK(T1.jacobi.pass);
  auto T2 = tits_build(hurwitz_make(CompKind::Binarion, q), J);
  CHECK(T2.dim() == 8);
  CHECK(T2.jacobi.pass);
  auto T3 = tits_build(hurwitz_make(CompKind::Quaternion, q), J);
  CHECK(T3.dim() == 21);
  CHECK(T3.jacobi.pass);
  auto T4 = tits_build(hurwitz_make(CompKind::Octonion, q), J);
  CHECK(T4.dim() == 52);
  CHECK(T4.jacobi.pass);
  CHECK(T4.table.is_super_anticommutative());
}

TEST_CASE("first row: T(F,J) is the inder J commutator table") {
  RatField q;
  auto J = h3_make(hurwitz_make(CompKind::Quaternion, q));
  auto T = tits_build(hurwitz_make(CompKind::Unit, q), J);
  auto DJ = inder_jordan_basis(J);
  REQUIRE(T.dim() == DJ.dim());
  for (int g = 0; g < DJ.dim(); ++g)
    for (int h = 0; h < DJ.dim(); ++h) {
      SVec<Rat> expect = DJ.decompose(super_commutator(DJ.gens[g], DJ.gens[h]));
      CHECK(T.table.product(g, h) == expect);
    }
}

TEST_CASE("T(Mat2, D_t) has dims (9|8) and passes Jacobi for t = 4") {
  RatField q;
  auto T = tits_build(hurwitz_make(CompKind::Quaternion, q), dt_make(q, q.of(4)));
  CHECK(T.dims() == std::pair<int, int>{9, 8});
  CHECK(T.jacobi.pass);
}

TEST_CASE("T(F, J02) = inder J02 has dims (3|0)") {
  RatField q;
  auto T = tits_build(hurwitz_make(CompKind::Unit, q), j02_make(q));
  CHECK(T.dims() == std::pair<int, int>{3, 0});
  CHECK(T.jacobi.pass);
}

TEST_CASE("tits gates") {
  RatField q;
  ModField f3 = make_mod_field(3);
  // characteristic 3 is rejected toward the g path
  auto C3 = hurwitz_make(CompKind::Quaternion, f3);
  auto J3 = h3_make(hurwitz_make(CompKind::Unit, f3));
  CHECK_THROWS_AS(tits_build(C3, J3), GateError);
  // missing trace
  CHECK_THROWS_AS(tits_build(hurwitz_make(CompKind::Unit, q), k3_make(q)), GateError);
  // dim C = 8 with a degree-3 failure: rejected without force
  CHECK_THROWS_AS(tits_build(hurwitz_make(CompKind::Octonion, q), dt_make(q, q.of(3))), GateError);
}

TEST_CASE("T(Cayley, D3, force) fails Jacobi and the conditions agree") {
  RatField q;
  auto C = hurwitz_make(CompKind::Octonion, q);
  auto D3 = dt_make(q, q.of(3));
  auto T = tits_build(C, D3, /*force=*/true);
  CHECK(T.dims() == std::pair<int, int>{24, 16});
  CHECK_FALSE(T.jacobi.pass);
  CHECK(T.jacobi.witness.has_value());
  auto rep = tits_conditions_check(C, D3);
  CHECK_FALSE(rep.all_pass());
}

TEST_CASE("conditions pass for degree-3 Jordan ingredients and associative C") {
  RatField q;
  auto repH = tits_conditions_check(hurwitz_make(CompKind::Octonion, q),
                                    h3_make(hurwitz_make(CompKind::Quaternion, q)));
  CHECK(repH.all_pass());
  // associative C needs no degree-3 condition
  auto repA = tits_conditions_check(hurwitz_make(CompKind::Quaternion, q), dt_make(q, q.of(3)));
  CHECK(repA.all_pass());
  // and the corresponding builds pass Jacobi
  CHECK(tits_build(hurwitz_make(CompKind::Quaternion, q), dt_make(q, q.of(3))).jacobi.pass);
}

TEST_CASE("second-row embedding is a monomorphism") {
  RatField q;
  CHECK(second_row_embedding_ok(h3_make(hurwitz_make(CompKind::Unit, q))));
  CHECK(second_row_embedding_ok(dt_make(q, q.of(2))));
}

TEST_CASE("g on one-dimensional ingredients: A1") {
  RatField q;
  auto A = g_ingredient(hurwitz_make(CompKind::Unit, q));
  auto L = g_build(A, A);
  CHECK(L.dim() == 3);
  CHECK(L.jacobi.pass);
}

TEST_CASE("g(F, FxF) has dim 8; g(FxF, FxF) dim 16; g(Mat2, F) dim 21") {
  RatField q;
  auto U = g_ingredient(hurwitz_make(CompKind::Unit, q));
  auto B = g_ingredient(hurwitz_make(CompKind::Binarion, q));
  auto M = g_ingredient(hurwitz_make(CompKind::Quaternion, q));
  auto L1 = g_build(U, B);
  CHECK(L1.dim() == 8);
  CHECK(L1.jacobi.pass);
  auto L2 = g_build(B, B);
  CHECK(L2.dim() == 16);
  CHECK(L2.jacobi.pass);
  auto L3 = g_build(M, U);
  CHECK(L3.dim() == 21);
  CHECK(L3.jacobi.pass);
}

TEST_CASE("g with composition superalgebras over GF(3)") {
  ModField f3 = make_mod_field(3);
  auto U = g_ingredient(hurwitz_make(CompKind::Unit, f3));
  auto B12 = g_ingredient(comp_super_make(CompKind::B12, f3));
  auto L1 = g_build(U, B12);
  CHECK(L1.dims() == std::pair<int, int>{6, 8});
  CHECK(L1.jacobi.pass);
  auto L2 = g_build(B12, B12);
  CHECK(L2.dims() == std::pair<int, int>{21, 16});
  CHECK(L2.jacobi.pass);
}

TEST_CASE("swap map is an isomorphism g(S,S') = g(S',S)") {
  RatField q;
  auto U = g_ingredient(hurwitz_make(CompKind::Unit, q));
  auto B = g_ingredient(hurwitz_make(CompKind::Binarion, q));
  auto gUB = g_build(U, B), gBU = g_build(B, U);
  CHECK(gUB.dims() == gBU.dims());
  CHECK(g_swap_isomorphism_ok(U, B, gUB, gBU));
  ModField f3 = make_mod_field(3);
  auto U3 = g_ingredient(hurwitz_make(CompKind::Unit, f3));
  auto B12 = g_ingredient(comp_super_make(CompKind::B12, f3));
  auto g1 = g_build(U3, B12), g2 = g_build(B12, U3);
  CHECK(g_swap_isomorphism_ok(U3, B12, g1, g2));
}

TEST_CASE("dim T(C,H3(C')) = dim g(C,C') on small pairs") {
  RatField q;
  for (auto ck : {CompKind::Unit, CompKind::Binarion}) {
    for (auto ck2 : {CompKind::Unit, CompKind::Binarion, CompKind::Quaternion}) {
      auto C = hurwitz_make(ck, q);
      auto C2 = hurwitz_make(ck2, q);
      auto T = tits_build(C, h3_make(C2));
      auto L = g_build(g_ingredient(C), g_ingredient(C2));
      CHECK(T.dim() == L.dim());
      CHECK(T.jacobi.pass);
      CHECK(L.jacobi.pass);
    }
  }
}

TEST_CASE("modified Tits with J02 gives the (10|14) simple ideal data") {
  ModField f3 = make_mod_field(3);
  auto C = hurwitz_make(CompKind::Octonion, f3);
  auto L = tits_modified_build(C, j02_make(f3));
  CHECK(L.dims() == std::pair<int, int>{10, 14});
  CHECK(L.jacobi.pass);
  CHECK(L.notes.count("coefficients") == 1);
  // characteristic gate
  RatField q;
  CHECK_THROWS_AS(tits_modified_build(hurwitz_make(CompKind::Octonion, q), j02_make(q)), GateError);
}

TEST_CASE("modified Tits with B(O(1;1),d)") {
  ModField f3 = make_mod_field(3);
  auto C = hurwitz_make(CompKind::Octonion, f3);
  auto dp = divided_powers_make(1, f3);
  auto B = b_gamma_d_make(dp.gamma, dp.d, dp.d_simple, "bgd:1");
  auto DJ = inder_jordan_basis(B);
  auto L = tits_modified_build(C, B);
  CHECK(L.dims() == std::pair<int, int>{21 + DJ.dim_even(), 21 + DJ.dim_odd()});
  CHECK(L.jacobi.pass);
}

TEST_CASE("g(Cayley,Cayley) over GF(7): dim 248, Jacobi-exact, simple") {
  ModField f7 = make_mod_field(7);
  auto O = g_ingredient(hurwitz_make(CompKind::Octonion, f7));
  auto L = g_build(O, O);
  CHECK(L.dim() == 248);
  CHECK(L.jacobi.pass);
  CHECK(is_simple(L.table).verdict == SimplicityReport::Verdict::Simple);
}

TEST_CASE("conditions verdict matches Jacobi across the acceptance pairs") {
  RatField q;
  ModField f5 = make_mod_field(5);
  auto C = hurwitz_make(CompKind::Octonion, q);
  // passing pairs
  for (auto rep : {tits_conditions_check(C, dt_make(q, q.of(2))),
                   tits_conditions_check(C, dt_make(q, q.ratio(1, 2))),
                   tits_conditions_check(C, j02_make(q)),
                   tits_conditions_check(hurwitz_make(CompKind::Quaternion, q), dt_make(q, q.of(7)))}) {
    CHECK(rep.all_pass());
    CHECK(rep.jacobi);
    CHECK(rep.agrees_with_jacobi());
  }
  // failing pairs
  for (auto rep : {tits_conditions_check(C, dt_make(q, q.of(3))),
                   tits_conditions_check(C, dt_make(q, q.of(5)))}) {
    CHECK_FALSE(rep.all_pass());
    CHECK_FALSE(rep.jacobi);
    CHECK(rep.agrees_with_jacobi());
  }
  // characteristic 5: K10 passes with the Cayley algebra
  auto rep5 = tits_conditions_check(hurwitz_make(CompKind::Octonion, f5), k10_make(f5));
  CHECK(rep5.all_pass());
  CHECK(rep5.agrees_with_jacobi());
}
