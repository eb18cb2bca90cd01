#pragma once

#include <cstdint>
#include <vector>

namespace fh::detail {

/// Calls fn for each 0-containing n-subset of [0, m) in lexicographic order.
template <typename Fn>
void for_each_zero_subset(std::uint64_t m, std::uint64_t n, Fn&& fn) {
  std::vector<std::uint64_t> cur(n);
  // cur[0] = 0 fixed; cur[1..] walk the (n-1)-combinations of [1, m).
  for (std::uint64_t i = 1; i < n; ++i) cur[i] = i;
  while (true) {
    fn(cur);
    std::uint64_t i = n;
    while (i > 1 && cur[i - 1] == m - n + i - 1) --i;
    if (i <= 1) return;
    ++cur[i - 1];
    for (std::uint64_t k = i; k < n; ++k) cur[k] = cur[k - 1] + 1;
  }
}

}  // namespace fh::detail
