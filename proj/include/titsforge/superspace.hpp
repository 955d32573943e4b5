// Z_2-graded basis bookkeeping.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace titsforge {

struct SuperSpace {
  std::vector<std::string> labels;
  std::vector<uint8_t> parity;  // 0 even, 1 odd

  int dim() const { return static_cast<int>(labels.size()); }
  int dim_even() const {
    int n = 0;
    for (auto p : parity) n += (p == 0);
    return n;
  }
  int dim_odd() const { return dim() - dim_even(); }

  void push(std::string label, int par) {
    labels.push_back(std::move(label));
    parity.push_back(static_cast<uint8_t>(par & 1));
  }

  void validate() const {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels)
      if (!seen.insert(l).second) throw std::invalid_argument("duplicate basis label: " + l);
  }

  static SuperSpace make(std::vector<std::pair<std::string, int>> basis) {
    SuperSpace s;
    for (auto& [l, p] : basis) s.push(std::move(l), p);
    s.validate();
    return s;
  }
};

}  // namespace titsforge
