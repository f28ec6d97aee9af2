#ifndef CDFORGE_DETAIL_SUBSETS_HPP
#define CDFORGE_DETAIL_SUBSETS_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace cdforge::detail {

// Visits every ascending k-subset of 1..n in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    fn(std::span<const int>(cur));
    int i = k - 1;
    while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

inline std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / i;
  return r;
}

}  // namespace cdforge::detail

#endif  // CDFORGE_DETAIL_SUBSETS_HPP
