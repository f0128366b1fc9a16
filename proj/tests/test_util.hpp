#pragma once

// Shared helpers for the test suites: tiny brute-force oracles kept separate
// from the library code paths they check.

#include <algorithm>
#include <set>
#include <vector>

#include "heyde/distribution.hpp"
#include "heyde/group.hpp"

namespace heyde::testutil {

inline Subgroup subgroup_of(const Group& g, std::vector<std::vector<std::int64_t>> coords) {
  std::vector<std::int64_t> idx;
  for (auto& c : coords) idx.push_back(g.index_of(g.canon(c)));
  std::sort(idx.begin(), idx.end());
  return Subgroup::from_sorted_indices(g, std::move(idx));
}

inline std::vector<std::int64_t> indices_of(const Group& g, std::vector<Elem> elems) {
  std::vector<std::int64_t> idx;
  for (auto& e : elems) idx.push_back(g.index_of(g.canon(e)));
  std::sort(idx.begin(), idx.end());
  return idx;
}

// Order of x by repeated addition, independent of Group::element_order.
inline std::int64_t order_by_iteration(const Group& g, const Elem& x) {
  Elem cur = x;
  std::int64_t n = 1;
  while (!g.is_zero(cur)) {
    cur = g.add(cur, x);
    ++n;
  }
  return n;
}

inline RationalDistribution uniform(const Group& g) {
  return RationalDistribution::haar(Subgroup::full(g));
}

}  // namespace heyde::testutil
