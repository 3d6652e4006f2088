#pragma once

#include <cstddef>
#include <vector>

#include "walkup/complex.hpp"

namespace walkup::detail {

/// Calls `fn` with every k-element subset of `set`, preserving order.
template <typename Fn>
void for_each_subset(const Simplex& set, std::size_t k, Fn&& fn) {
  const std::size_t n = set.size();
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  Simplex current(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) current[i] = set[idx[i]];
    fn(current);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace walkup::detail
