// Ingredient descriptors and the four table drivers (Freudenthal's Magic
// Square, the Supermagic Rectangle, the characteristic-3 Magic Square, and
// the Supermagic Square), with built-in expected dimensions.

#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "titsforge/construct.hpp"

namespace titsforge {

// ---------------------------------------------------------------------------
// Descriptor vocabulary:
//   compositions: unit | binarion | quaternion | octonion | b12 | b42
//   jordans:      h3:<comp> | j02 | dt:<t> | k10 | bgd:<n>
//   symmetric:    okubo | para:<comp>
// ---------------------------------------------------------------------------

template <class F>
Composition<F> make_composition(const std::string& d, F field) {
  if (d == "unit") return hurwitz_make(CompKind::Unit, field);
  if (d == "binarion") return hurwitz_make(CompKind::Binarion, field);
  if (d == "quaternion") return hurwitz_make(CompKind::Quaternion, field);
  if (d == "octonion") return hurwitz_make(CompKind::Octonion, field);
  if (d == "b12") return comp_super_make(CompKind::B12, field);
  if (d == "b42") return comp_super_make(CompKind::B42, field);
  throw GateError("unknown composition descriptor '" + d + "'");
}

template <class F>
Jordan<F> make_jordan(const std::string& d, F field) {
  if (d.rfind("h3:", 0) == 0) return h3_make(make_composition(d.substr(3), field));
  if (d == "j02") return j02_make(field);
  if (d.rfind("dt:", 0) == 0) {
    auto J = dt_make(field, field.parse(d.substr(3)));
    J.kind = d;
    return J;
  }
  if (d == "k10") return k10_make(field);
  if (d == "k3") return k3_make(field);
  if (d.rfind("bgd:", 0) == 0) {
    int n = std::stoi(d.substr(4));
    auto dp = divided_powers_make(n, field);
    return b_gamma_d_make(dp.gamma, dp.d, dp.d_simple, d);
  }
  throw GateError("unknown jordan descriptor '" + d + "'");
}

template <class F>
GIngredient<F> make_g_ingredient(const std::string& d, F field) {
  if (d == "okubo") return g_ingredient(okubo_make(field));
  if (d.rfind("para:", 0) == 0) {
    auto S = para_hurwitz(make_composition(d.substr(5), field));
    S.provenance = d;
    return g_ingredient(S);
  }
  auto gi = g_ingredient(make_composition(d, field));
  gi.name = d;
  return gi;
}

// ---------------------------------------------------------------------------
// Table reports
// ---------------------------------------------------------------------------

struct CellReport {
  std::string row, col;
  bool built = false;
  std::string gate_note;
  int dim_even = 0, dim_odd = 0;
  bool jacobi = false;
  int derived_even = 0, derived_odd = 0;
  std::string simple;
  std::string command;
  bool dims_match = true;
  int expect_even = -1, expect_odd = -1;
};

struct TableReport {
  std::string kind, field;
  unsigned seed = 0;
  std::vector<std::string> rows, cols;
  std::vector<CellReport> cells;
  double elapsed_ms = 0;

  bool ok() const {
    for (const auto& c : cells) {
      if (!c.gate_note.empty()) continue;  // gated cells are explanatory
      if (!c.built || !c.jacobi || !c.dims_match) return false;
    }
    return true;
  }

  std::string render_text() const {
    std::ostringstream os;
    os << "table " << kind << " over " << field << " (seed " << seed << ")\n";
    size_t w = 10;
    for (const auto& c : cols) w = std::max(w, c.size() + 2);
    auto cell_at = [&](const std::string& r, const std::string& c) -> const CellReport* {
      for (const auto& cell : cells)
        if (cell.row == r && cell.col == c) return &cell;
      return nullptr;
    };
    os << std::setw(12) << "" << " ";
    for (const auto& c : cols) os << std::setw(static_cast<int>(w)) << c;
    os << "\n";
    for (const auto& r : rows) {
      os << std::setw(12) << r << " ";
      for (const auto& c : cols) {
        const CellReport* cell = cell_at(r, c);
        std::string txt = "";
        if (!cell) txt = "";
        else if (!cell->gate_note.empty()) txt = "(gated)";
        else if (!cell->built) txt = "(error)";
        else {
          txt = cell->dim_odd ? ("(" + std::to_string(cell->dim_even) + "|" +
                                 std::to_string(cell->dim_odd) + ")")
                              : std::to_string(cell->dim_even);
          if (!cell->jacobi) txt += "!J";
          if (!cell->dims_match) txt += "!=";
        }
        os << std::setw(static_cast<int>(w)) << txt;
      }
      os << "\n";
    }
    for (const auto& cell : cells)
      if (!cell.gate_note.empty())
        os << "  [" << cell.row << " x " << cell.col << "] gated: " << cell.gate_note << "\n";
    os << (ok() ? "all cells pass (jacobi exact, dims as expected)"
                : "FAILURES present (see cells)")
       << "\n";
    return os.str();
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["table"] = kind;
    j["field"] = field;
    j["seed"] = seed;
    j["rows"] = rows;
    j["cols"] = cols;
    j["ok"] = ok();
    nlohmann::json cj = nlohmann::json::array();
    for (const auto& c : cells) {
      nlohmann::json e;
      e["row"] = c.row;
      e["col"] = c.col;
      if (!c.gate_note.empty()) {
        e["gated"] = c.gate_note;
      } else {
        e["dims"] = {c.dim_even, c.dim_odd};
        e["jacobi"] = c.jacobi ? "pass" : "fail";
        e["derived"] = {c.derived_even, c.derived_odd};
        if (!c.simple.empty()) e["simple"] = c.simple;
        e["dims_match"] = c.dims_match;
        e["command"] = c.command;
      }
      cj.push_back(std::move(e));
    }
    j["cells"] = std::move(cj);
    return j;
  }
};

namespace tabledata {

// magic / magic3 grid (all even parts)
inline const std::vector<std::string> kHurwitz = {"unit", "binarion", "quaternion", "octonion"};
inline const int kMagic[4][4] = {{3, 8, 21, 52}, {8, 16, 35, 78}, {21, 35, 66, 133}, {52, 78, 133, 248}};

inline const std::vector<std::string> kRectangleCols = {"h3:unit", "h3:binarion", "h3:quaternion",
                                                        "h3:octonion", "j02", "dt:2", "k10"};
// extra columns of the rectangle: (even|odd) per Hurwitz row
inline const int kRectJ02[4][2] = {{3, 0}, {3, 2}, {6, 6}, {17, 14}};
inline const int kRectDt2[4][2] = {{3, 2}, {4, 4}, {9, 8}, {24, 16}};
inline const int kRectK10[4][2] = {{6, 4}, {11, 8}, {24, 16}, {55, 32}};

inline const std::vector<std::string> kSuper = {"unit", "binarion", "quaternion",
                                                "octonion", "b12", "b42"};
// upper-triangle expected graded dims for the supermagic square
inline const int kSupermagic[6][6][2] = {
    {{3, 0}, {8, 0}, {21, 0}, {52, 0}, {6, 8}, {21, 14}},
    {{0, 0}, {16, 0}, {35, 0}, {78, 0}, {11, 14}, {35, 20}},
    {{0, 0}, {0, 0}, {66, 0}, {133, 0}, {24, 26}, {66, 32}},
    {{0, 0}, {0, 0}, {0, 0}, {248, 0}, {55, 50}, {133, 56}},
    {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {21, 16}, {36, 40}},
    {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {78, 64}}};

}  // namespace tabledata

namespace detail {

template <class F>
void fill_cell_analysis(CellReport& cell, const LieSuperAlgebra<F>& L, unsigned seed) {
  cell.built = true;
  cell.dim_even = L.dims().first;
  cell.dim_odd = L.dims().second;
  cell.jacobi = L.jacobi.pass;
  auto der = derived_subalgebra(L.table);
  auto dd = graded_dims(L.table, der);
  cell.derived_even = dd.first;
  cell.derived_odd = dd.second;
  if (L.table.field.characteristic() == 0) {
    cell.simple = "n/a (char 0; use analyze --primes)";
  } else {
    cell.simple = is_simple(L.table, seed).verdict_str();
  }
  if (cell.expect_even >= 0)
    cell.dims_match = (cell.dim_even == cell.expect_even && cell.dim_odd == cell.expect_odd);
}

}  // namespace detail

template <class F>
TableReport run_table(const std::string& kind, F field, unsigned seed) {
  TableReport rep;
  rep.kind = kind;
  rep.seed = seed;
  rep.field = field.characteristic() == 0 ? "q" : "fp:" + std::to_string(field.characteristic());
  long p = field.characteristic();
  auto t0 = std::chrono::steady_clock::now();

  if (kind == "magic" || kind == "rectangle") {
    if (p == 3) throw GateError(kind + " requires characteristic != 2,3 (use magic3/supermagic at fp:3)");
    rep.rows = tabledata::kHurwitz;
    rep.cols = kind == "magic"
                   ? std::vector<std::string>{"h3:unit", "h3:binarion", "h3:quaternion", "h3:octonion"}
                   : tabledata::kRectangleCols;
    for (int r = 0; r < 4; ++r) {
      auto C = make_composition(rep.rows[r], field);
      for (size_t cidx = 0; cidx < rep.cols.size(); ++cidx) {
        const std::string& col = rep.cols[cidx];
        CellReport cell;
        cell.row = rep.rows[r];
        cell.col = col;
        cell.command = "titsforge build tits " + cell.row + " " + col + " --field " + rep.field +
                       " --seed " + std::to_string(seed);
        if (col == "k10" && p != 5) {
          cell.gate_note = "K10 column requires characteristic 5";
          rep.cells.push_back(std::move(cell));
          continue;
        }
        if (cidx < 4) {
          cell.expect_even = tabledata::kMagic[r][cidx];
          cell.expect_odd = 0;
        } else if (col == "j02") {
          cell.expect_even = tabledata::kRectJ02[r][0];
          cell.expect_odd = tabledata::kRectJ02[r][1];
        } else if (col == "dt:2") {
          cell.expect_even = tabledata::kRectDt2[r][0];
          cell.expect_odd = tabledata::kRectDt2[r][1];
        } else {
          cell.expect_even = tabledata::kRectK10[r][0];
          cell.expect_odd = tabledata::kRectK10[r][1];
        }
        auto J = make_jordan(col, field);
        auto L = tits_build(C, J, /*force=*/false, seed);
        detail::fill_cell_analysis(cell, L, seed);
        rep.cells.push_back(std::move(cell));
      }
    }
  } else if (kind == "magic3" || kind == "supermagic") {
    if (p != 3) throw GateError(kind + " requires characteristic 3");
    rep.rows = kind == "magic3" ? tabledata::kHurwitz : tabledata::kSuper;
    rep.cols = rep.rows;
    std::vector<GIngredient<F>> ing;
    ing.reserve(rep.rows.size());
    for (const auto& d : rep.rows) ing.push_back(make_g_ingredient(d, field));
    const size_t nr = rep.rows.size();
    for (size_t r = 0; r < nr; ++r)
      for (size_t c = (kind == "supermagic" ? r : 0); c < nr; ++c) {
        CellReport cell;
        cell.row = rep.rows[r];
        cell.col = rep.cols[c];
        cell.command = "titsforge build g " + cell.row + " " + cell.col + " --field fp:3 --seed " +
                       std::to_string(seed);
        if (kind == "magic3") {
          cell.expect_even = tabledata::kMagic[r][c];
          cell.expect_odd = 0;
        } else {
          cell.expect_even = tabledata::kSupermagic[r][c][0];
          cell.expect_odd = tabledata::kSupermagic[r][c][1];
        }
        auto L = g_build(ing[r], ing[c]);
        detail::fill_cell_analysis(cell, L, seed);
        rep.cells.push_back(std::move(cell));
      }
  } else {
    throw GateError("unknown table '" + kind + "' (magic|rectangle|magic3|supermagic)");
  }
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace titsforge
