#pragma once

#include <cstddef>
#include <span>

namespace greedy {

// Leaves of the reduction tree are summed left to right; everything above
// is a fixed midpoint split, so the rounding pattern only depends on n.
inline constexpr std::size_t kPairwiseLeaf = 16;

/// Pairwise (tree) sum of term(0) + ... + term(n-1).
template <typename Term>
double pairwise_sum(std::size_t first, std::size_t last, const Term& term) {
  const std::size_t n = last - first;
  if (n <= kPairwiseLeaf) {
    double acc = 0.0;
    for (std::size_t i = first; i < last; ++i) acc += term(i);
    return acc;
  }
  const std::size_t mid = first + n / 2;
  return pairwise_sum(first, mid, term) + pairwise_sum(mid, last, term);
}

template <typename Term>
double pairwise_sum(std::size_t n, const Term& term) {
  return pairwise_sum(std::size_t{0}, n, term);
}

inline double pairwise_sum(std::span<const double> values) {
  return pairwise_sum(values.size(),
                      [values](std::size_t i) { return values[i]; });
}

}  // namespace greedy
