#pragma once

#include <map>
#include <string>
#include <vector>

#include "qglf/domain.hpp"

namespace qglf {

/// Exact counts indexed by dimension vectors (r_1, ..., r_k). Cells that are
/// absent are zero.
template <class V>
struct CountTable {
  int arity = 0;
  int rank = 0;
  std::string parameter;  // "sym", a prime q, or "Sn"
  std::map<std::vector<int>, V> entries;

  V at(const std::vector<int>& dims) const {
    auto it = entries.find(dims);
    return it == entries.end() ? V(0) : it->second;
  }

  void add(const std::vector<int>& dims, const V& value) {
    if (qglf::is_zero(value)) return;
    auto [it, inserted] = entries.emplace(dims, value);
    if (!inserted) {
      it->second += value;
      if (qglf::is_zero(it->second)) entries.erase(it);
    }
  }

  V total() const {
    V sum(0);
    for (const auto& [dims, value] : entries) sum += value;
    return sum;
  }
};

/// Every vector in [lo, hi]^arity in lexicographic order.
inline std::vector<std::vector<int>> all_dim_vectors(int arity, int lo, int hi) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(arity), lo);
  if (hi < lo) return out;
  while (true) {
    out.push_back(cur);
    int i = arity - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == hi) cur[static_cast<std::size_t>(i--)] = lo;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace qglf
