// AlgebraFile JSON serialization:
// {
//   "field":  {"char": 0},
//   "basis":  [{"label": "...", "parity": 0|1}, ...],
//   "brackets": [[i, j, k, "scalar"], ...],   // i<j, plus odd-odd diagonal
//   "provenance": {...},
//   "blocks": {"name": [start, len], ...}
// }
// Scalars are strings: "a/b" over Q, decimal residues over GF(p).

#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "titsforge/construct.hpp"

namespace titsforge {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
nlohmann::json algebra_to_json(const AlgebraTable<F>& table,
                               const std::vector<std::tuple<std::string, int, int>>& blocks,
                               const nlohmann::json& provenance) {
  nlohmann::json j;
  j["field"] = {{"char", table.field.characteristic()}};
  nlohmann::json basis = nlohmann::json::array();
  for (int i = 0; i < table.dim(); ++i)
    basis.push_back({{"label", table.space.labels[i]}, {"parity", static_cast<int>(table.space.parity[i])}});
  j["basis"] = std::move(basis);
  nlohmann::json brackets = nlohmann::json::array();
  for (int i = 0; i < table.dim(); ++i)
    for (int jj = i; jj < table.dim(); ++jj) {
      if (i == jj && !(table.space.parity[i] && table.space.parity[jj])) continue;
      for (const auto& [k, c] : table.product(i, jj).t)
        brackets.push_back({i, jj, k, table.field.str(c)});
    }
  j["brackets"] = std::move(brackets);
  nlohmann::json blk = nlohmann::json::object();
  for (const auto& [name, start, len] : blocks) blk[name] = {start, len};
  j["blocks"] = std::move(blk);
  j["provenance"] = provenance;
  return j;
}

template <class F>
nlohmann::json algebra_to_json(const LieSuperAlgebra<F>& L) {
  nlohmann::json prov;
  prov["construction"] = L.construction;
  prov["ingredients"] = L.ingredients;
  prov["jacobi"] = L.jacobi.pass ? "pass" : "fail";
  if (!L.jacobi.pass && L.jacobi.witness) {
    auto [a, b, c] = *L.jacobi.witness;
    prov["jacobi_witness"] = {a, b, c};
  }
  for (const auto& [k, v] : L.notes) prov[k] = v;
  return algebra_to_json(L.table, L.blocks, prov);
}

template <class F>
struct AlgebraFile {
  AlgebraTable<F> table;
  std::vector<std::tuple<std::string, int, int>> blocks;
  nlohmann::json provenance;

  explicit AlgebraFile(AlgebraTable<F> t) : table(std::move(t)) {}
};

template <class F>
AlgebraFile<F> algebra_from_json(const nlohmann::json& j, F field) {
  using K = typename F::Elem;
  if (!j.contains("field") || !j["field"].contains("char"))
    throw ParseError("missing field.char");
  if (j["field"]["char"].get<long>() != field.characteristic())
    throw ParseError("field mismatch between file and context");
  if (!j.contains("basis") || !j["basis"].is_array()) throw ParseError("missing basis array");
  SuperSpace s;
  for (size_t i = 0; i < j["basis"].size(); ++i) {
    const auto& b = j["basis"][i];
    if (!b.contains("label") || !b.contains("parity"))
      throw ParseError("basis[" + std::to_string(i) + "]: missing label/parity");
    int par = b["parity"].get<int>();
    if (par != 0 && par != 1) throw ParseError("basis[" + std::to_string(i) + "]: parity must be 0 or 1");
    s.push(b["label"].get<std::string>(), par);
  }
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  AlgebraFile<F> file(AlgebraTable<F>(field, s));
  const int n = file.table.dim();
  if (!j.contains("brackets") || !j["brackets"].is_array()) throw ParseError("missing brackets array");
  for (size_t e = 0; e < j["brackets"].size(); ++e) {
    const auto& ent = j["brackets"][e];
    if (!ent.is_array() || ent.size() != 4)
      throw ParseError("brackets[" + std::to_string(e) + "]: expected [i,j,k,\"scalar\"]");
    int i = ent[0].get<int>(), jj = ent[1].get<int>(), k = ent[2].get<int>();
    if (i < 0 || jj < 0 || k < 0 || i >= n || jj >= n || k >= n)
      throw ParseError("brackets[" + std::to_string(e) + "]: index out of range");
    if (i > jj) throw ParseError("brackets[" + std::to_string(e) + "]: expected i <= j entries");
    if (i == jj && !(s.parity[i] && s.parity[jj]))
      throw ParseError("brackets[" + std::to_string(e) + "]: diagonal entry on a non-odd pair");
    K c;
    try {
      c = field.parse(ent[3].get<std::string>());
    } catch (const GateError& g) {
      throw ParseError("brackets[" + std::to_string(e) + "]: " + g.what());
    }
    SVec<K> v = file.table.product(i, jj);
    v.add_term(k, c);
    file.table.set_product(i, jj, v);
  }
  // reconstruct the mirrored entries
  for (int i = 0; i < n; ++i)
    for (int jj = i + 1; jj < n; ++jj) {
      const SVec<K>& v = file.table.product(i, jj);
      if (v.is_zero()) continue;
      file.table.set_product(jj, i, (s.parity[i] && s.parity[jj]) ? v : v.negated());
    }
  if (j.contains("blocks"))
    for (const auto& [name, range] : j["blocks"].items()) {
      if (!range.is_array() || range.size() != 2) throw ParseError("blocks." + name + ": expected [start,len]");
      file.blocks.emplace_back(name, range[0].template get<int>(), range[1].template get<int>());
    }
  if (j.contains("provenance")) file.provenance = j["provenance"];
  return file;
}

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("JSON parse error in ") + path + ": " + e.what());
  }
}

inline void write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << j.dump(1) << "\n";
}

}  // namespace titsforge
