// Spans of (super)derivations with tracked decomposition, used for inder C,
// inder J and the triality algebra bases.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "titsforge/field.hpp"
#include "titsforge/linalg.hpp"
#include "titsforge/sparse.hpp"

namespace titsforge {

template <class K>
struct DerivationSpan {
  std::vector<SMat<K>> gens;  // accepted generators, homogeneous
  std::vector<std::string> labels;
  std::vector<int> parities;
  RowSpan<K> span{true};  // flattened matrices, tracked by accepted generator

  int dim() const { return static_cast<int>(gens.size()); }
  int dim_even() const {
    int n = 0;
    for (int p : parities) n += (p == 0);
    return n;
  }
  int dim_odd() const { return dim() - dim_even(); }

  bool offer(const SMat<K>& m, std::string label) {
    if (!span.offer(m.flatten())) return false;
    gens.push_back(m);
    labels.push_back(std::move(label));
    parities.push_back(m.parity);
    return true;
  }

  bool contains(const SMat<K>& m) const { return span.contains(m.flatten()); }

  // Coordinates of m in the accepted-generator basis; throws if m is outside.
  SVec<K> decompose(const SMat<K>& m) const {
    auto d = span.decompose(m.flatten());
    if (!d) throw std::logic_error("matrix not in derivation span");
    return *d;
  }

  // Closure tag: every supercommutator of generators stays in the span.
  bool closed_under_bracket() const {
    for (size_t i = 0; i < gens.size(); ++i)
      for (size_t j = i; j < gens.size(); ++j)
        if (!contains(super_commutator(gens[i], gens[j]))) return false;
    return true;
  }
};

}  // namespace titsforge
