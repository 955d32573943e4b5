// Exact linear algebra: reduced row-echelon spans with generator tracking,
// kernel computation, and affine solving. Pivots are always the first nonzero
// entry in basis order, so kernels and decompositions are deterministic.

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "titsforge/sparse.hpp"

namespace titsforge {

template <class K>
class RowSpan {
 public:
  explicit RowSpan(bool track = false) : track_(track) {}

  int rank() const { return static_cast<int>(rows_.size()); }

  // Reduce v against the current rows. If row_coeffs is non-null it receives
  // the coefficients (indexed by internal row position) used in the reduction:
  // v = sum coeff_r * row_r + remainder.
  SVec<K> reduce(SVec<K> v, SVec<K>* row_coeffs = nullptr) const {
    if (row_coeffs) row_coeffs->t.clear();
    for (size_t r = 0; r < rows_.size() && !v.is_zero(); ++r) {
      K c = v.get(rows_[r].pivot);
      if (c.is_zero()) continue;
      v.axpy(-c, rows_[r].v);
      if (row_coeffs) row_coeffs->add_term(static_cast<int>(r), c);
    }
    return v;
  }

  bool contains(const SVec<K>& v) const { return reduce(v).is_zero(); }

  // Offer a generator; returns true if the rank grew. Rows are kept fully
  // reduced (RREF) with pivot coefficient 1.
  bool offer(const SVec<K>& gen) {
    SVec<K> combo_in_rows;
    SVec<K> rem = reduce(gen, track_ ? &combo_in_rows : nullptr);
    if (rem.is_zero()) return false;
    K inv = rem.lead_coeff().inv();
    Row nr;
    nr.pivot = rem.lead();
    nr.v = rem.scaled(inv);
    if (track_) {
      // gen = sum combo*rows + rem  =>  new row = inv*(gen - sum combo*rows)
      nr.combo = SVec<K>::unit(static_cast<int>(accepted_), inv);
      for (const auto& [r, c] : combo_in_rows.t) nr.combo.axpy(-(inv * c), rows_[r].combo);
    }
    for (auto& row : rows_) {
      K c = row.v.get(nr.pivot);
      if (c.is_zero()) continue;
      row.v.axpy(-c, nr.v);
      if (track_) row.combo.axpy(-c, nr.combo);
    }
    size_t pos = 0;
    while (pos < rows_.size() && rows_[pos].pivot < nr.pivot) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(nr));
    ++accepted_;
    return true;
  }

  // Number of accepted generators (== rank); generator indices used by
  // decompose() refer to acceptance order.
  int accepted() const { return static_cast<int>(accepted_); }

  // Express v as a combination of the accepted generators. Requires tracking.
  std::optional<SVec<K>> decompose(const SVec<K>& v) const {
    if (!track_) throw std::logic_error("RowSpan::decompose requires tracking");
    SVec<K> coeffs;
    SVec<K> rem = reduce(v, &coeffs);
    if (!rem.is_zero()) return std::nullopt;
    SVec<K> out;
    for (const auto& [r, c] : coeffs.t) out.axpy(c, rows_[r].combo);
    return out;
  }

  // Echelon rows (canonical basis of the span), sorted by pivot.
  std::vector<SVec<K>> basis() const {
    std::vector<SVec<K>> b;
    b.reserve(rows_.size());
    for (const auto& r : rows_) b.push_back(r.v);
    return b;
  }

  std::vector<int> pivots() const {
    std::vector<int> p;
    p.reserve(rows_.size());
    for (const auto& r : rows_) p.push_back(r.pivot);
    return p;
  }

 private:
  struct Row {
    int pivot = -1;
    SVec<K> v;
    SVec<K> combo;  // expression in accepted generators (when tracking)
  };
  std::vector<Row> rows_;
  bool track_;
  size_t accepted_ = 0;
};

template <class K>
struct LinearSolution {
  bool consistent = false;
  SVec<K> particular;           // free variables set to zero
  std::vector<SVec<K>> kernel;  // one vector per free column, ascending
  int rank = 0;
};

// Solve (rows) x = rhs, where rows[i] is the i-th equation over ncols unknowns
// and rhs[i] its right-hand side (empty rhs = homogeneous system). `one` is
// the field unit.
template <class K>
LinearSolution<K> solve_linear(const std::vector<SVec<K>>& rows, int ncols, const K& one,
                               const SVec<K>& rhs = {}) {
  RowSpan<K> span;  // augmented column lives at index ncols
  for (size_t i = 0; i < rows.size(); ++i) {
    SVec<K> r = rows[i];
    K b = rhs.get(static_cast<int>(i));
    if (!b.is_zero()) r.add_term(ncols, -b);
    span.offer(r);
  }
  LinearSolution<K> sol;
  sol.consistent = true;
  auto bas = span.basis();
  auto piv = span.pivots();
  std::vector<char> is_pivot(ncols, 0);
  std::vector<size_t> prow;
  for (size_t r = 0; r < bas.size(); ++r) {
    if (piv[r] == ncols) {
      sol.consistent = false;
      continue;
    }
    is_pivot[piv[r]] = 1;
    prow.push_back(r);
  }
  sol.rank = static_cast<int>(prow.size());
  if (!sol.consistent) return sol;
  for (size_t r : prow) {
    K aug = bas[r].get(ncols);
    if (!aug.is_zero()) sol.particular.add_term(piv[r], -aug);
  }
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    SVec<K> kv;
    kv.add_term(f, one);
    for (size_t r : prow) {
      K c = bas[r].get(f);
      if (!c.is_zero()) kv.add_term(piv[r], -c);
    }
    sol.kernel.push_back(std::move(kv));
  }
  return sol;
}

// Kernel of a matrix given by columns acting on coordinates: unknowns indexed
// by column, equations by row.
template <class K>
std::vector<SVec<K>> kernel_of_matrix(const SMat<K>& m, const K& one) {
  // Build equation rows: row r has entry m[r][c] at column c.
  std::vector<SVec<K>> eq(m.rows);
  for (int c = 0; c < m.cols; ++c)
    for (const auto& [r, v] : m.col[c].t) eq[r].add_term(c, v);
  return solve_linear(eq, m.cols, one).kernel;
}

}  // namespace titsforge
