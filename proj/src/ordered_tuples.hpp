/* Internal: lexicographic iteration over ordered k-tuples of distinct
 * indices from {0, ..., n-1}. */
#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace dynshaf::detail {

inline std::vector<std::size_t> first_ordered_tuple(std::size_t k) {
  std::vector<std::size_t> t(k);
  std::iota(t.begin(), t.end(), 0);
  return t;
}

inline bool next_ordered_tuple(std::vector<std::size_t>& t, std::size_t n) {
  std::size_t k = t.size();
  std::vector<bool> used(n, false);
  while (k > 0) {
    --k;
    for (std::size_t i = 0; i < t.size(); ++i) used[t[i]] = i < k;
    std::size_t cand = t[k] + 1;
    while (cand < n && used[cand]) ++cand;
    if (cand < n) {
      t[k] = cand;
      used[cand] = true;
      for (std::size_t i = k + 1; i < t.size(); ++i) {
        std::size_t c = 0;
        while (used[c]) ++c;
        t[i] = c;
        used[c] = true;
      }
      return true;
    }
  }
  return false;
}

}  // namespace dynshaf::detail
