#include <catch2/catch_amalgamated.hpp>

#include "titsforge/algebra.hpp"
#include "titsforge/jordan.hpp"

using namespace titsforge;

TEST_CASE("super_tensor: unit law F (x) B = B") {
  RatField q;
  auto B = j02_make(q);
  AlgebraTable<RatField> Fonedim(q, SuperSpace::make({{"1", 0}}));
  Fonedim.set_product(0, 0, SVec<Rat>::unit(0, q.one()));
  Fonedim.unit = SVec<Rat>::unit(0, q.one());
  auto T = super_tensor(Fonedim, B.alg);
  REQUIRE(T.dim() == B.dim());
  for (int i = 0; i < B.dim(); ++i)
    for (int j = 0; j < B.dim(); ++j) CHECK(T.product(i, j) == B.alg.product(i, j));
}

TEST_CASE("super_tensor: K3 (x) K3 has dims (5|4)") {
  RatField q;
  auto K3 = k3_make(q);
  auto T = super_tensor(K3.alg, K3.alg);
  CHECK(T.dim() == 9);
  CHECK(T.space.dim_even() == 5);
  CHECK(T.space.dim_odd() == 4);
  CHECK(T.is_supercommutative());
}

TEST_CASE("super_tensor: odd(x)odd times odd(x)odd picks up the Koszul sign") {
  RatField q;
  auto K3 = k3_make(q);
  auto T = super_tensor(K3.alg, K3.alg);
  // (x (x) x)(y (x) y) = (-1)^{|x||y|} xy (x) xy = -(e (x) e)
  int xx = 1 * 3 + 1, yy = 2 * 3 + 2, ee = 0;
  CHECK(T.product(xx, yy) == SVec<Rat>::unit(ee, q.of(-1)));
}

TEST_CASE("super_tensor of supercommutative tables is supercommutative") {
  RatField q;
  auto A = j02_make(q), B = dt_make(q, q.of(4));
  CHECK(A.alg.is_supercommutative());
  CHECK(B.alg.is_supercommutative());
  CHECK(super_tensor(A.alg, B.alg).is_supercommutative());
}

TEST_CASE("super_tensor rejects mismatched fields") {
  auto A = j02_make(make_mod_field(5));
  auto B = j02_make(make_mod_field(7));
  CHECK_THROWS_AS(super_tensor(A.alg, B.alg), GateError);
}

TEST_CASE("envelope: (x (x) e1)^2 = 0 for odd x") {
  RatField q;
  auto J = j02_make(q);
  Envelope<RatField> env(J.alg, 2);
  auto xe1 = env.term(1, 0b01, q.one());
  CHECK(env.mul(xe1, xe1).empty());
}

TEST_CASE("envelope of J02: (u (x) e1)(v (x) e2) = -b(u,v) 1 (x) e1e2 (Koszul)") {
  RatField q;
  auto J = j02_make(q);
  Envelope<RatField> env(J.alg, 2);
  auto ue1 = env.term(1, 0b01, q.one());
  auto ve2 = env.term(2, 0b10, q.one());
  auto p = env.mul(ue1, ve2);
  REQUIRE(p.size() == 1);
  auto& [key, c] = *p.begin();
  CHECK(key.first == 0);
  CHECK(key.second == 0b11u);
  CHECK(c == q.of(-1));  // (-1)^{|e1||v|} b(u1,u2) = -1
  // envelope of a supercommutative algebra is commutative
  auto pr = env.mul(ve2, ue1);
  CHECK(env.sub(p, pr).empty());
}

TEST_CASE("envelope rejects parity-inconsistent terms") {
  RatField q;
  auto J = j02_make(q);
  Envelope<RatField> env(J.alg, 2);
  CHECK_THROWS_AS(env.term(1, 0b11, q.one()), GateError);  // odd basis, even monomial
  CHECK_THROWS_AS(env.term(0, 0b01, q.one()), GateError);  // even basis, odd monomial
}
