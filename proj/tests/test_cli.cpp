#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "titsforge/cli.hpp"

using namespace titsforge;

namespace {

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli_main(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("titsforge_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("cli: build then analyze round-trips the report") {
  TempDir tmp;
  auto b = run({"build", "g", "b12", "b12", "--field", "fp:3", "--out", tmp.file("g33.json")});
  REQUIRE(b.code == 0);
  auto a = run({"analyze", tmp.file("g33.json")});
  REQUIRE(a.code == 0);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["dims"] == nlohmann::json({21, 16}));
  CHECK(j["jacobi"] == "pass");
  CHECK(j["derived"] == 37);
  CHECK(j["center"] == 0);
  CHECK(j["simple"] == "Simple");
}

TEST_CASE("cli: forced failing build records jacobi=fail and exits 0") {
  TempDir tmp;
  auto b = run({"build", "tits", "octonion", "dt:3", "--field", "q", "--force", "--out",
                tmp.file("bad.json")});
  CHECK(b.code == 0);
  auto j = read_json_file(tmp.file("bad.json"));
  CHECK(j["provenance"]["jacobi"] == "fail");
  // analyzing it reports the failure and exits 1
  auto a = run({"analyze", tmp.file("bad.json")});
  CHECK(a.code == 1);
  CHECK(nlohmann::json::parse(a.out)["jacobi"] == "fail");
  // without --force the gate rejects (exit 1)
  auto nb = run({"build", "tits", "octonion", "dt:3", "--field", "q", "--out", tmp.file("x.json")});
  CHECK(nb.code == 1);
  CHECK(nb.err.find("degree-3") != std::string::npos);
}

TEST_CASE("cli: gating violations cite the gate") {
  TempDir tmp;
  auto r = run({"build", "g", "b12", "b12", "--field", "fp:5", "--out", tmp.file("x.json")});
  CHECK(r.code == 1);
  CHECK(r.err.find("characteristic 3") != std::string::npos);
  auto r2 = run({"build", "tits", "octonion", "k10", "--field", "fp:3", "--out", tmp.file("y.json")});
  CHECK(r2.code == 1);
}

TEST_CASE("cli: corrupted file exits 2 with a parse message") {
  TempDir tmp;
  {
    std::ofstream f(tmp.file("corrupt.json"));
    f << "{ not json";
  }
  auto r = run({"analyze", tmp.file("corrupt.json")});
  CHECK(r.code == 2);
  CHECK(r.err.find("parse error") != std::string::npos);
  auto r2 = run({"analyze", tmp.file("missing.json")});
  CHECK(r2.code == 2);
}

TEST_CASE("cli: usage errors exit 2") {
  auto r = run({"frobnicate"});
  CHECK(r.code == 2);
  auto r2 = run({"build", "tits", "octonion"});  // missing ing2
  CHECK(r2.code == 2);
}

TEST_CASE("cli: ch3 exit codes") {
  CHECK(run({"ch3", "dt:2", "--field", "q"}).code == 0);
  CHECK(run({"ch3", "dt:3", "--field", "q"}).code == 1);
  CHECK(run({"ch3", "k10", "--field", "fp:5"}).code == 0);
  CHECK(run({"ch3", "k10", "--field", "fp:7"}).code == 1);
  CHECK(run({"ch3", "k10", "--field", "q"}).code == 1);
}

TEST_CASE("cli: build tits octonion k10 at fp:5 gives the (55|32) superalgebra") {
  TempDir tmp;
  auto b = run({"build", "tits", "octonion", "k10", "--field", "fp:5", "--out", tmp.file("el.json")});
  REQUIRE(b.code == 0);
  CHECK(b.out.find("(55|32)") != std::string::npos);
  auto a = run({"analyze", tmp.file("el.json"), "--killing"});
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["dims"] == nlohmann::json({55, 32}));
  CHECK(j["simple"] == "Simple");
}

TEST_CASE("cli: analyze --primes for char-0 simplicity") {
  TempDir tmp;
  auto b = run({"build", "tits", "quaternion", "h3:unit", "--field", "q", "--out", tmp.file("c3.json")});
  REQUIRE(b.code == 0);
  auto bad = run({"analyze", tmp.file("c3.json"), "--simplicity"});
  CHECK(bad.code == 1);  // must name --primes
  auto good = run({"analyze", tmp.file("c3.json"), "--simplicity", "--primes", "5,7"});
  REQUIRE(good.code == 0);
  auto j = nlohmann::json::parse(good.out);
  CHECK(j["simple_mod"]["5"] == "Simple");
  CHECK(j["simple_mod"]["7"] == "Simple");
}

TEST_CASE("cli: tables match the bundled golden files") {
  TempDir tmp;
  auto check_table = [&](const std::string& kind, const std::string& field,
                         const std::string& golden) {
    auto r = run({"table", kind, "--field", field, "--json", tmp.file("t.json")});
    REQUIRE(r.code == 0);
    auto fresh = read_json_file(tmp.file("t.json"));
    auto gold = read_json_file(std::string(TF_GOLDEN_DIR) + "/" + golden);
    CHECK(fresh == gold);
  };
  check_table("magic", "q", "magic_q.json");
  check_table("magic3", "fp:3", "magic3_fp3.json");
  check_table("rectangle", "fp:5", "rectangle_fp5.json");
  check_table("rectangle", "q", "rectangle_q.json");
  check_table("supermagic", "fp:3", "supermagic_fp3.json");
}

TEST_CASE("cli: inadmissible table fields are rejected naming the constraint") {
  auto r = run({"table", "supermagic", "--field", "q"});
  CHECK(r.code == 1);
  CHECK(r.err.find("characteristic 3") != std::string::npos);
  auto r2 = run({"table", "magic", "--field", "fp:3"});
  CHECK(r2.code == 1);
}

TEST_CASE("cli: round-trip identity for an acceptance cell") {
  // build -> emit -> parse -> analyze equals the in-memory pipeline
  TempDir tmp;
  ModField f3 = make_mod_field(3);
  auto L = g_build(make_g_ingredient("binarion", f3), make_g_ingredient("b12", f3));
  auto b = run({"build", "g", "binarion", "b12", "--field", "fp:3", "--out", tmp.file("g23.json")});
  REQUIRE(b.code == 0);
  auto file = algebra_from_json(read_json_file(tmp.file("g23.json")), f3);
  REQUIRE(file.table.dim() == L.dim());
  for (int i = 0; i < L.dim(); ++i)
    for (int k = 0; k < L.dim(); ++k) REQUIRE(file.table.product(i, k) == L.table.product(i, k));
  auto a = run({"analyze", tmp.file("g23.json"), "--simplicity"});
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["simple"] == "NotSimple");
  CHECK(j["witness_dims"] == nlohmann::json({10, 14}));
}

TEST_CASE("cli: TITSFORGE_SEED env override and --seed precedence") {
  TempDir tmp;
  ::setenv("TITSFORGE_SEED", "424242", 1);
  auto r = run({"ch3", "j02", "--field", "q"});
  ::unsetenv("TITSFORGE_SEED");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["seed"] == 424242);
  auto r2 = run({"ch3", "j02", "--field", "q", "--seed", "7"});
  CHECK(nlohmann::json::parse(r2.out)["seed"] == 7);
}
