#pragma once

#include <cstddef>
#include <vector>

namespace polysec::detail {

// C(n, k) saturating at `cap`.
inline std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order;
// stops early when fn returns true. Returns whether it stopped early.
template <class Fn>
bool for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (fn(static_cast<const std::vector<std::size_t>&>(idx))) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// All subsets of size 1..max_size, ordered by size, then lexicographically.
inline std::vector<std::vector<std::size_t>> subsets_up_to(std::size_t n, std::size_t max_size) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t k = 1; k <= max_size && k <= n; ++k) {
    for_each_combination(n, k, [&](const std::vector<std::size_t>& s) {
      out.push_back(s);
      return false;
    });
  }
  return out;
}

}  // namespace polysec::detail
