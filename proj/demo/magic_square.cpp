// Build Freudenthal's Magic Square over Q with the Tits construction and
// print the dimension grid, then construct the characteristic-5 simple
// Lie superalgebra T(C(F), K10).

#include <iostream>

#include "titsforge/construct.hpp"

using namespace titsforge;

int main() {
  RatField q;
  CompKind kinds[4] = {CompKind::Unit, CompKind::Binarion, CompKind::Quaternion, CompKind::Octonion};

  std::cout << "T(C, H3(C')) over Q:\n";
  for (auto row : kinds) {
    auto C = hurwitz_make(row, q);
    for (auto col : kinds) {
      auto J = h3_make(hurwitz_make(col, q));
      auto L = tits_build(C, J);
      std::cout << "\t" << L.dim() << (L.jacobi.pass ? "" : "(!)");
    }
    std::cout << "\n";
  }

  ModField f5 = make_mod_field(5);
  auto T = tits_build(hurwitz_make(CompKind::Octonion, f5), k10_make(f5));
  auto sim = is_simple(T.table);
  std::cout << "\nT(C(F), K10) over GF(5): dims (" << T.dims().first << "|" << T.dims().second
            << "), jacobi " << (T.jacobi.pass ? "pass" : "fail") << ", " << sim.verdict_str()
            << "\n";
  return 0;
}
