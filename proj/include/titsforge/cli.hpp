// Command-line front end: build / analyze / table / ch3.
//
// Exit codes: 0 success, 1 mathematical failure (gating, Jacobi, golden
// mismatch, ch3 fails), 2 usage or parse errors.

#pragma once

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "titsforge/json_io.hpp"
#include "titsforge/tables.hpp"

namespace titsforge {

inline const char* kVersion = "titsforge 0.1.0";
inline constexpr unsigned kDefaultSeed = 1729;

inline unsigned seed_from_env() {
  if (const char* s = std::getenv("TITSFORGE_SEED")) {
    try {
      return static_cast<unsigned>(std::stoul(s));
    } catch (...) {
    }
  }
  return kDefaultSeed;
}

namespace cli_detail {

inline std::string sanitize(std::string s) {
  for (char& c : s)
    if (c == ':' || c == '/' || c == ' ') c = '-';
  return s;
}

template <class F>
int run_build(F field, const std::string& construction, const std::string& ing1,
              const std::string& ing2, const std::string& fieldstr, std::string outpath, bool force,
              unsigned seed, std::ostream& out) {
  LieSuperAlgebra<F> L = [&] {
    if (construction == "tits")
      return tits_build(make_composition(ing1, field), make_jordan(ing2, field), force, seed);
    if (construction == "g")
      return g_build(make_g_ingredient(ing1, field), make_g_ingredient(ing2, field));
    if (construction == "tits-modified")
      return tits_modified_build(make_composition(ing1, field), make_jordan(ing2, field));
    throw GateError("unknown construction '" + construction + "'");
  }();
  nlohmann::json j = algebra_to_json(L);
  j["provenance"]["engine"] = kVersion;
  j["provenance"]["field"] = fieldstr;
  j["provenance"]["seed"] = seed;
  j["provenance"]["command"] = "titsforge build " + construction + " " + ing1 + " " + ing2 +
                               " --field " + fieldstr + " --seed " + std::to_string(seed) +
                               (force ? " --force" : "");
  j["provenance"]["basis_convention"] = "split algebras; Cayley = Zorn vector matrices (e1,e2,u1..u3,v1..v3)";
  if (outpath.empty())
    outpath = sanitize(construction) + "_" + sanitize(ing1) + "_" + sanitize(ing2) + "_" +
              sanitize(fieldstr) + ".json";
  write_json_file(outpath, j);
  auto [de, dodd] = L.dims();
  out << "wrote " << outpath << ": dims (" << de << "|" << dodd << "), jacobi "
      << (L.jacobi.pass ? "pass" : "fail") << ", seed " << seed << "\n";
  return (L.jacobi.pass || force) ? 0 : 1;
}

template <class F>
int run_analyze(F field, const nlohmann::json& j, bool want_simplicity, bool want_killing,
                const std::vector<long>& primes, unsigned seed, std::ostream& out) {
  AlgebraFile<F> file = algebra_from_json(j, field);
  auto t0 = std::chrono::steady_clock::now();
  nlohmann::json rep;
  rep["dims"] = {file.table.space.dim_even(), file.table.space.dim_odd()};
  JacobiReport jac = check_super_jacobi(file.table);
  rep["jacobi"] = jac.pass ? "pass" : "fail";
  if (!jac.pass && jac.witness) {
    auto [a, b, c] = *jac.witness;
    rep["jacobi_witness"] = {a, b, c};
  }
  auto der = derived_subalgebra(file.table);
  auto dd = graded_dims(file.table, der);
  rep["derived"] = static_cast<int>(der.size());
  rep["derived_dims"] = {dd.first, dd.second};
  auto ctr = center(file.table);
  rep["center"] = static_cast<int>(ctr.size());
  if (want_killing) {
    auto kil = killing_form(file.table, seed);
    rep["killing"] = {{"radical", kil.radical_dim},
                      {"rank", file.table.dim() - kil.radical_dim},
                      {"invariance", kil.invariance_ok ? "pass" : "fail"}};
  }
  long p = field.characteristic();
  if (p != 0) {
    auto sim = is_simple(file.table, seed);
    rep["simple"] = sim.verdict_str();
    if (sim.has_witness) rep["witness_dims"] = {sim.witness_dim_even, sim.witness_dim_odd};
    if (!sim.detail.empty()) rep["simple_detail"] = sim.detail;
  } else if (want_simplicity) {
    if (primes.empty())
      throw GateError("simplicity over Q needs per-prime reduction: pass --primes p1,p2,...");
    nlohmann::json per;
    for (long q : primes) {
      auto red = reduce_mod_p(file.table, q);
      auto sim = is_simple(red, seed);
      per[std::to_string(q)] = sim.verdict_str();
    }
    rep["simple_mod"] = per;
  }
  rep["seed"] = seed;
  rep["runtime_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  out << rep.dump(1) << "\n";
  return jac.pass ? 0 : 1;
}

}  // namespace cli_detail

inline int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  CLI::App app{std::string(kVersion) +
               " - exact structure-constant engine for the exceptional Lie (super)algebra "
               "constructions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  unsigned seed = seed_from_env();

  std::string construction, ing1, ing2, fieldstr = "q", outpath, inpath, kind, jsonpath, jordan;
  bool force = false, want_simplicity = false, want_killing = false;
  std::string primes_csv;

  auto* b = app.add_subcommand("build", "build an algebra and write an AlgebraFile (JSON)");
  b->add_option("construction", construction, "tits | g | tits-modified")->required();
  b->add_option("ing1", ing1, "first ingredient descriptor")->required();
  b->add_option("ing2", ing2, "second ingredient descriptor")->required();
  b->add_option("--field", fieldstr, "q or fp:<odd prime> (default q)");
  b->add_option("--out", outpath, "output path (default derived from the inputs)");
  b->add_flag("--force", force, "build even if the degree-3 gate or Jacobi fails (tits only)");
  b->add_option("--seed", seed, "RNG seed (default TITSFORGE_SEED or 1729)");

  auto* a = app.add_subcommand("analyze", "analyze an AlgebraFile");
  a->add_option("file", inpath, "input AlgebraFile")->required();
  a->add_flag("--simplicity", want_simplicity, "force the simplicity report (char 0 needs --primes)");
  a->add_flag("--killing", want_killing, "include the Killing form report");
  a->add_option("--primes", primes_csv, "comma-separated good primes for char-0 simplicity");
  a->add_option("--seed", seed, "RNG seed");

  auto* t = app.add_subcommand("table", "reproduce one of the paper tables");
  t->add_option("which", kind, "magic | rectangle | magic3 | supermagic")->required();
  t->add_option("--field", fieldstr, "q or fp:<odd prime>");
  t->add_option("--json", jsonpath, "also write the TableReport JSON here");
  t->add_option("--seed", seed, "RNG seed");

  auto* c = app.add_subcommand("ch3", "degree-3 Cayley-Hamilton certifier for a Jordan descriptor");
  c->add_option("jordan", jordan, "jordan descriptor (h3:<comp>|j02|dt:<t>|k10)")->required();
  c->add_option("--field", fieldstr, "q or fp:<odd prime>");
  c->add_option("--seed", seed, "RNG seed");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (b->parsed()) {
      FieldSpec fs = FieldSpec::parse(fieldstr);
      if (fs.characteristic == 0)
        return run_build(RatField{}, construction, ing1, ing2, fieldstr, outpath, force, seed, out);
      return run_build(make_mod_field(fs.characteristic), construction, ing1, ing2, fieldstr,
                       outpath, force, seed, out);
    }
    if (a->parsed()) {
      std::vector<long> primes;
      if (!primes_csv.empty()) {
        std::stringstream ss(primes_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) primes.push_back(std::stol(tok));
      }
      nlohmann::json j = read_json_file(inpath);
      if (!j.contains("field") || !j["field"].contains("char")) throw ParseError("missing field.char");
      long p = j["field"]["char"].get<long>();
      if (p == 0)
        return run_analyze(RatField{}, j, want_simplicity, want_killing, primes, seed, out);
      return run_analyze(make_mod_field(p), j, want_simplicity, want_killing, primes, seed, out);
    }
    if (t->parsed()) {
      FieldSpec fs = FieldSpec::parse(fieldstr);
      TableReport rep = fs.characteristic == 0
                            ? run_table(kind, RatField{}, seed)
                            : run_table(kind, make_mod_field(fs.characteristic), seed);
      out << rep.render_text();
      if (!jsonpath.empty()) write_json_file(jsonpath, rep.to_json());
      return rep.ok() ? 0 : 1;
    }
    if (c->parsed()) {
      FieldSpec fs = FieldSpec::parse(fieldstr);
      Ch3Report rep;
      if (fs.characteristic == 0)
        rep = ch3_verify(make_jordan(jordan, RatField{}), seed);
      else
        rep = ch3_verify(make_jordan(jordan, make_mod_field(fs.characteristic)), seed);
      nlohmann::json j;
      j["jordan"] = jordan;
      j["field"] = fieldstr;
      j["holds"] = rep.holds;
      j["draws"] = rep.draws;
      j["seed"] = rep.seed;
      j["sampling"] = rep.field_floor;
      if (!rep.holds) j["witness"] = rep.witness;
      out << j.dump(1) << "\n";
      return rep.holds ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const GateError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace titsforge
