#pragma once

#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "diairesis/errors.hpp"

namespace diairesis {

inline constexpr std::size_t powerset_max_items = 20;

// Canonical subset order: by subset size, then lexicographically by member
// positions within each size. For {1,2,3} this lists
//   {}, {1}, {2}, {3}, {1,2}, {1,3}, {2,3}, {1,2,3}.
// The visitor receives each subset as a span of positions into the universe.
inline void for_each_subset(std::size_t n,
                            const std::function<void(std::span<const std::size_t>)>& fn) {
  if (n > powerset_max_items)
    throw CapacityError("powerset of " + std::to_string(n) + " items exceeds the " +
                        std::to_string(powerset_max_items) + "-item guard");
  std::vector<std::size_t> comb;
  for (std::size_t k = 0; k <= n; ++k) {
    comb.resize(k);
    std::iota(comb.begin(), comb.end(), std::size_t{0});
    bool more = true;
    while (more) {
      fn(std::span<const std::size_t>(comb));
      // advance to the next k-combination in lexicographic order
      more = false;
      for (std::size_t i = k; i-- > 0;) {
        if (comb[i] < n - k + i) {
          ++comb[i];
          for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
          more = true;
          break;
        }
      }
    }
  }
}

template <typename T>
std::vector<std::vector<T>> powerset(const std::vector<T>& universe) {
  std::vector<std::vector<T>> out;
  out.reserve(std::size_t{1} << universe.size());
  for_each_subset(universe.size(), [&](std::span<const std::size_t> positions) {
    std::vector<T> subset;
    subset.reserve(positions.size());
    for (std::size_t p : positions) subset.push_back(universe[p]);
    out.push_back(std::move(subset));
  });
  return out;
}

template <typename T>
std::vector<std::vector<T>> singletons(const std::vector<T>& universe) {
  if (universe.size() > powerset_max_items)
    throw CapacityError("powerset of " + std::to_string(universe.size()) +
                        " items exceeds the " +
                        std::to_string(powerset_max_items) + "-item guard");
  std::vector<std::vector<T>> out;
  out.reserve(universe.size());
  for (const T& item : universe) out.push_back({item});
  return out;
}

}  // namespace diairesis
