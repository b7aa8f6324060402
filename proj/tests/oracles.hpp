// Independent reference computations used only by the tests. Nothing here
// calls into the code paths it is used to check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

/// Monotonicity over all nested pairs, O(4^n).
inline bool is_capacity_naive(std::size_t n, const std::vector<double>& v) {
  const std::uint32_t count = 1u << n;
  if (v[0] != 0.0 || v[count - 1] != 1.0) return false;
  for (std::uint32_t a = 0; a < count; ++a)
    for (std::uint32_t b = 0; b < count; ++b)
      if ((a & ~b) == 0 && v[a] > v[b]) return false;
  return true;
}

/// Every assignment of grid values to the 2^n subsets, filtered naively.
inline std::vector<std::vector<double>> all_capacities_naive(std::size_t n,
                                                             const std::vector<double>& grid) {
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::vector<double>> out;
  std::vector<std::size_t> digit(count, 0);
  while (true) {
    std::vector<double> v(count);
    for (std::size_t s = 0; s < count; ++s) v[s] = grid[digit[s]];
    if (is_capacity_naive(n, v)) out.push_back(v);
    std::size_t k = 0;
    while (k < count && ++digit[k] == grid.size()) digit[k++] = 0;
    if (k == count) break;
  }
  return out;
}

/// max_i ν({x : f(x) >= f_(i)}) ∗ f_(i) via the increasing rearrangement of
/// f: the level set at the i-th smallest value is the set of points ranked
/// at or above i (with ties grouped by value).
inline double integral_by_rearrangement(std::size_t n, const std::vector<double>& nu,
                                        const std::vector<double>& f,
                                        const std::function<double(double, double)>& op) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return f[a] < f[b]; });
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (f[idx[k]] >= f[idx[i]]) mask |= 1u << idx[k];
    best = std::max(best, op(nu[mask], f[idx[i]]));
  }
  return best;
}

/// Dense t-grid evaluation of max_t ν(f_t) ∗ t with t = k / steps.
inline double integral_dense(std::size_t n, const std::vector<double>& nu,
                             const std::vector<double>& f,
                             const std::function<double(double, double)>& op, int steps) {
  double best = 0.0;
  for (int k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) / steps;
    std::uint32_t mask = 0;
    for (std::size_t x = 0; x < n; ++x)
      if (f[x] >= t) mask |= 1u << x;
    best = std::max(best, op(nu[mask], t));
  }
  return best;
}

}  // namespace oracle
