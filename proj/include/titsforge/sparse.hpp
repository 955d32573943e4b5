// Sparse vectors and column-major sparse matrices over an exact scalar type.
// No explicit zeros are ever stored.

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace titsforge {

template <class K>
struct SVec {
  // (index, coefficient), sorted by index, coefficients nonzero.
  std::vector<std::pair<int, K>> t;

  SVec() = default;

  static SVec unit(int i, K c) {
    SVec v;
    if (!c.is_zero()) v.t.emplace_back(i, std::move(c));
    return v;
  }

  bool is_zero() const { return t.empty(); }
  size_t nnz() const { return t.size(); }

  int lead() const { return t.empty() ? -1 : t.front().first; }
  const K& lead_coeff() const { return t.front().second; }

  K get(int i) const {
    auto it = std::lower_bound(t.begin(), t.end(), i,
                               [](const auto& e, int idx) { return e.first < idx; });
    if (it != t.end() && it->first == i) return it->second;
    return K();
  }

  void add_term(int i, const K& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(t.begin(), t.end(), i,
                               [](const auto& e, int idx) { return e.first < idx; });
    if (it != t.end() && it->first == i) {
      it->second += c;
      if (it->second.is_zero()) t.erase(it);
    } else {
      t.insert(it, {i, c});
    }
  }

  // this += c*u  (merge)
  SVec& axpy(const K& c, const SVec& u) {
    if (c.is_zero() || u.is_zero()) return *this;
    std::vector<std::pair<int, K>> out;
    out.reserve(t.size() + u.t.size());
    size_t a = 0, b = 0;
    while (a < t.size() || b < u.t.size()) {
      if (b == u.t.size() || (a < t.size() && t[a].first < u.t[b].first)) {
        out.push_back(std::move(t[a++]));
      } else if (a == t.size() || u.t[b].first < t[a].first) {
        K v = c * u.t[b].second;
        if (!v.is_zero()) out.emplace_back(u.t[b].first, std::move(v));
        ++b;
      } else {
        K v = t[a].second + c * u.t[b].second;
        if (!v.is_zero()) out.emplace_back(t[a].first, std::move(v));
        ++a, ++b;
      }
    }
    t = std::move(out);
    return *this;
  }

  SVec& operator+=(const SVec& u) {
    std::vector<std::pair<int, K>> out;
    out.reserve(t.size() + u.t.size());
    size_t a = 0, b = 0;
    while (a < t.size() || b < u.t.size()) {
      if (b == u.t.size() || (a < t.size() && t[a].first < u.t[b].first)) {
        out.push_back(std::move(t[a++]));
      } else if (a == t.size() || u.t[b].first < t[a].first) {
        out.push_back(u.t[b++]);
      } else {
        K v = t[a].second + u.t[b].second;
        if (!v.is_zero()) out.emplace_back(t[a].first, std::move(v));
        ++a, ++b;
      }
    }
    t = std::move(out);
    return *this;
  }

  SVec& operator-=(const SVec& u) {
    for (const auto& [i, c] : u.t) add_term(i, -c);
    return *this;
  }

  friend SVec operator+(SVec a, const SVec& b) {
    a += b;
    return a;
  }
  friend SVec operator-(SVec a, const SVec& b) {
    SVec r = std::move(a);
    for (const auto& [i, c] : b.t) r.add_term(i, -c);
    return r;
  }

  SVec scaled(const K& c) const {
    SVec r;
    if (c.is_zero()) return r;
    r.t.reserve(t.size());
    for (const auto& [i, v] : t) {
      K w = c * v;
      if (!w.is_zero()) r.t.emplace_back(i, std::move(w));
    }
    return r;
  }

  SVec negated() const {
    SVec r;
    r.t.reserve(t.size());
    for (const auto& [i, v] : t) r.t.emplace_back(i, -v);
    return r;
  }

  friend bool operator==(const SVec& a, const SVec& b) { return a.t == b.t; }
};

template <class K>
K dot(const SVec<K>& a, const SVec<K>& b) {
  K r;
  size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    if (a.t[i].first < b.t[j].first)
      ++i;
    else if (b.t[j].first < a.t[i].first)
      ++j;
    else {
      r += a.t[i].second * b.t[j].second;
      ++i, ++j;
    }
  }
  return r;
}

// Column-major sparse matrix: col[c] is the image of basis vector c.
// `parity` marks homogeneous maps on a super space (0 = even, 1 = odd).
template <class K>
struct SMat {
  int rows = 0, cols = 0;
  int parity = 0;
  std::vector<SVec<K>> col;

  SMat() = default;
  SMat(int r, int c, int par = 0) : rows(r), cols(c), parity(par), col(c) {}

  static SMat identity(int n, const K& one) {
    SMat m(n, n, 0);
    for (int i = 0; i < n; ++i) m.col[i] = SVec<K>::unit(i, one);
    return m;
  }

  bool is_zero() const {
    for (const auto& c : col)
      if (!c.is_zero()) return false;
    return true;
  }

  K get(int r, int c) const { return col[c].get(r); }

  SVec<K> apply(const SVec<K>& v) const {
    SVec<K> r;
    for (const auto& [c, x] : v.t) r.axpy(x, col[c]);
    return r;
  }

  // this ∘ B
  SMat compose(const SMat& B) const {
    if (cols != B.rows) throw std::logic_error("SMat::compose dimension mismatch");
    SMat r(rows, B.cols, (parity + B.parity) & 1);
    for (int c = 0; c < B.cols; ++c) r.col[c] = apply(B.col[c]);
    return r;
  }

  SMat scaled(const K& k) const {
    SMat r(rows, cols, parity);
    for (int c = 0; c < cols; ++c) r.col[c] = col[c].scaled(k);
    return r;
  }

  friend SMat operator+(const SMat& a, const SMat& b) {
    SMat r(a.rows, a.cols, a.parity);
    for (int c = 0; c < a.cols; ++c) r.col[c] = a.col[c] + b.col[c];
    return r;
  }
  friend SMat operator-(const SMat& a, const SMat& b) {
    SMat r(a.rows, a.cols, a.parity);
    for (int c = 0; c < a.cols; ++c) r.col[c] = a.col[c] - b.col[c];
    return r;
  }

  SMat transpose() const {
    SMat r(cols, rows, parity);
    for (int c = 0; c < cols; ++c)
      for (const auto& [rr, v] : col[c].t) r.col[rr].add_term(c, v);
    return r;
  }

  // Flatten to a coordinate vector, column-major: index = c*rows + r.
  SVec<K> flatten() const {
    SVec<K> v;
    for (int c = 0; c < cols; ++c)
      for (const auto& [r, x] : col[c].t) v.t.emplace_back(c * rows + r, x);
    return v;
  }

  static SMat unflatten(int rows, int cols, const SVec<K>& v, int parity = 0) {
    SMat m(rows, cols, parity);
    for (const auto& [idx, x] : v.t) m.col[idx / rows].add_term(idx % rows, x);
    return m;
  }

  friend bool operator==(const SMat& a, const SMat& b) {
    return a.rows == b.rows && a.cols == b.cols && a.col == b.col;
  }
};

// Super commutator [A,B] = AB - (-1)^{|A||B|} BA.
template <class K>
SMat<K> super_commutator(const SMat<K>& a, const SMat<K>& b) {
  SMat<K> ab = a.compose(b), ba = b.compose(a);
  if ((a.parity & b.parity) & 1) return ab + ba;
  return ab - ba;
}

}  // namespace titsforge
