#include <catch2/catch_amalgamated.hpp>

#include "titsforge/json_io.hpp"

using namespace titsforge;

TEST_CASE("round trip: parse(emit(L)) reproduces the table") {
  ModField f3 = make_mod_field(3);
  auto L = g_build(g_ingredient(hurwitz_make(CompKind::Unit, f3)),
                   g_ingredient(comp_super_make(CompKind::B12, f3)));
  nlohmann::json j = algebra_to_json(L);
  auto file = algebra_from_json(j, f3);
  REQUIRE(file.table.dim() == L.dim());
  for (int i = 0; i < L.dim(); ++i)
    for (int k = 0; k < L.dim(); ++k) CHECK(file.table.product(i, k) == L.table.product(i, k));
  CHECK(file.blocks.size() == L.blocks.size());
  // emit is idempotent through a parse cycle
  nlohmann::json j2 = algebra_to_json(file.table, file.blocks, file.provenance);
  CHECK(j2["basis"] == j["basis"]);
  CHECK(j2["brackets"] == j["brackets"]);
}

TEST_CASE("round trip over Q keeps scalars exact") {
  RatField q;
  auto L = tits_build(hurwitz_make(CompKind::Quaternion, q), dt_make(q, q.ratio(1, 2)));
  nlohmann::json j = algebra_to_json(L);
  auto file = algebra_from_json(j, q);
  for (int i = 0; i < L.dim(); ++i)
    for (int k = 0; k < L.dim(); ++k) REQUIRE(file.table.product(i, k) == L.table.product(i, k));
  CHECK(check_super_jacobi(file.table).pass);
}

TEST_CASE("parse rejections carry locations") {
  ModField f3 = make_mod_field(3);
  nlohmann::json j;
  j["field"] = {{"char", 3}};
  j["basis"] = {{{"label", "a"}, {"parity", 0}}, {{"label", "b"}, {"parity", 1}}};
  j["brackets"] = nlohmann::json::array();
  CHECK_NOTHROW(algebra_from_json(j, f3));

  auto bad = j;
  bad["brackets"].push_back({1, 0, 0, "1"});  // i > j
  CHECK_THROWS_WITH(algebra_from_json(bad, f3), Catch::Matchers::ContainsSubstring("brackets[0]"));
  bad = j;
  bad["brackets"].push_back({0, 0, 1, "1"});  // even diagonal
  CHECK_THROWS_AS(algebra_from_json(bad, f3), ParseError);
  bad = j;
  bad["brackets"].push_back({0, 5, 1, "1"});  // out of range
  CHECK_THROWS_AS(algebra_from_json(bad, f3), ParseError);
  bad = j;
  bad["basis"].push_back({{"label", "a"}, {"parity", 0}});  // duplicate label
  CHECK_THROWS_AS(algebra_from_json(bad, f3), ParseError);
  bad = j;
  bad["field"]["char"] = 5;  // mismatch with context
  CHECK_THROWS_AS(algebra_from_json(bad, f3), ParseError);
  bad = j;
  bad["brackets"].push_back({0, 1, 1, "x"});  // malformed scalar
  CHECK_THROWS_AS(algebra_from_json(bad, f3), ParseError);
}

TEST_CASE("odd-odd diagonal entries are allowed") {
  ModField f3 = make_mod_field(3);
  nlohmann::json j;
  j["field"] = {{"char", 3}};
  j["basis"] = {{{"label", "h"}, {"parity", 0}}, {{"label", "x"}, {"parity", 1}}};
  j["brackets"] = {{1, 1, 0, "1"}};  // [x,x] = h
  auto file = algebra_from_json(j, f3);
  CHECK(file.table.product(1, 1) == SVec<Mod>::unit(0, f3.one()));
}

TEST_CASE("malformed JSON reports a parse location") {
  CHECK_THROWS_AS(read_json_file("/nonexistent/path.json"), ParseError);
}
