#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "greedy/circle.hpp"

namespace greedy {

/// a_n at turn angle bitreverse(n) for n = 0..N-1, all dyadic-exact.
/// The 2^m-th section is the set of 2^m-th roots of unity. N = 0 gives an
/// empty configuration.
Configuration canonical_structural(std::size_t n);

/// U_s(2^j) for j = 0..max_exponent, computed once.
///
/// s = 0 is accepted as well: the midpoint product of the 2^j-th roots of
/// unity is 2, so every entry is -log 2.
class DyadicPotentialTable {
 public:
  DyadicPotentialTable(RieszParameter s, unsigned max_exponent);

  [[nodiscard]] RieszParameter s() const noexcept { return s_; }
  [[nodiscard]] unsigned max_exponent() const noexcept {
    return static_cast<unsigned>(values_.size() - 1);
  }
  /// U_s(2^j).
  [[nodiscard]] double at(unsigned j) const;
  /// U_{N,s}(a_N) = sum_k U_s(2^{n_k}) over the binary expansion of N.
  /// Requires 1 <= N < 2^{max_exponent + 1}.
  [[nodiscard]] double extremal_value(std::uint64_t n) const;

 private:
  RieszParameter s_;
  std::vector<double> values_;
};

/// Table large enough for every N <= n_max.
DyadicPotentialTable dyadic_table_for(std::uint64_t n_max, RieszParameter s);

/// U_{N,s}(a_N) for N = 1..n_max (element N-1). Requires n_max >= 1.
std::vector<double> extremal_values_structural(std::uint64_t n_max, RieszParameter s);

struct GreedyRun {
  RieszParameter s{0.0};
  Configuration initial;
  Configuration points;
  // Element n-1 is U_{n,s}(a_n), the potential of a_0..a_{n-1} at a_n, for
  // n = 1..points.size()-1. Entries before first_greedy_step() belong to the
  // prescribed initial points.
  std::vector<double> extremal_values;

  [[nodiscard]] std::size_t first_greedy_step() const noexcept { return initial.size(); }
};

/// Grows initial to N points, each new point minimizing the running
/// s-potential (maximizing the product of distances when s = 0).
///
/// Every gap between neighbouring points is seeded with
/// max(8, ceil(grid * arclength)) samples; the best sample's bracket is
/// refined by golden-section search and then polished by bisection on the
/// derivative. Near-ties (relative 1e-12) go to the smallest angle.
/// Requires a non-empty initial configuration and grid >= 64.
GreedyRun greedy_numerical(const Configuration& initial, RieszParameter s,
                           std::size_t n, std::size_t grid = 4096,
                           unsigned refine_iters = 40);

/// E_s(alpha_N) = 2 sum_{j<N} U_{j,s}(a_j) for N = 1..size+1 (element N-1).
std::vector<double> energy_series_from_extremal(std::span<const double> extremal_values);

}  // namespace greedy
