/**
 * @brief Comonotonicity and three constructions built on it: the monotone
 * comonotone chain between ψ <= φ, the level-raise transform, and the
 * squeeze witness used to derive monotonicity from two-sided homogeneity.
 */
#pragma once

#include <algorithm>
#include <numeric>
#include <utility>

#include "core.hpp"
#include "random.hpp"

namespace tnint {

namespace detail {
inline int sign(double v) { return (v > 0.0) - (v < 0.0); }
}  // namespace detail

/// (f(x)-f(y))(g(x)-g(y)) >= 0 for all x, y. Compared by sign, so exact.
inline bool is_comonotone(const FnVec& f, const FnVec& g) {
  require_same_size(f, g);
  for (std::size_t x = 0; x < f.size(); ++x)
    for (std::size_t y = x + 1; y < f.size(); ++y)
      if (detail::sign(f[x] - f[y]) * detail::sign(g[x] - g[y]) < 0) return false;
  return true;
}

/// Two functions, both nondecreasing along one shared random ordering of the
/// points, with values drawn from `grid`.
inline std::pair<FnVec, FnVec> random_comonotone_pair(std::size_t n, const ValueGrid& grid,
                                                      std::uint64_t seed) {
  if (n < 1) throw InputError("point count must be at least 1");
  if (grid.empty()) throw InputError("value grid is empty");
  Rng rng(seed);
  const auto order = rng.permutation(n);
  auto draw_sorted = [&] {
    std::vector<double> v(n);
    for (auto& x : v) x = check_unit(rng.pick(grid), "value grid");
    std::sort(v.begin(), v.end());
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) out[order[k]] = v[k];
    return FnVec(std::move(out));
  };
  FnVec f = draw_sorted();
  FnVec g = draw_sorted();
  return {std::move(f), std::move(g)};
}

/// Point indices sorted by increasing f, ties broken by index.
inline std::vector<std::size_t> ascending_order(const FnVec& f) {
  std::vector<std::size_t> order(f.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
  return order;
}

/**
 * Builds ψ_1, ..., ψ_{n-1} with ψ <= ψ_1 <= ... <= ψ_{n-1} <= φ and each
 * consecutive pair (including ψ, ψ_1 and ψ_{n-1}, φ) comonotone.
 *
 * With points x_1, ..., x_n ordered so that φ is nondecreasing:
 *   ψ_1(x)      = ψ(x) ∨ ψ(x_1)
 *   ψ_{i+1}(x_j) = ψ_i(x_j)                    for j <= i
 *   ψ_{i+1}(x_j) = ψ_i(x_{i+1}) ∨ ψ_i(x_j)      for j >= i+1
 * Results are returned in the original point indexing.
 */
inline std::vector<FnVec> monotone_chain(const FnVec& psi, const FnVec& phi) {
  require_same_size(psi, phi);
  if (!pointwise_leq(psi, phi)) throw PreconditionError("monotone_chain needs psi <= phi");
  const std::size_t n = phi.size();
  const auto order = ascending_order(phi);

  // Work in sorted coordinates: cur[j] = ψ_i(x_{j+1}).
  std::vector<double> cur(n);
  for (std::size_t j = 0; j < n; ++j) cur[j] = psi[order[j]];

  auto unsort = [&](const std::vector<double>& sorted) {
    std::vector<double> out(n);
    for (std::size_t j = 0; j < n; ++j) out[order[j]] = sorted[j];
    return FnVec(std::move(out));
  };

  std::vector<FnVec> chain;
  if (n < 2) return chain;
  chain.reserve(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    // Raise everything from position i onward to at least cur[i].
    for (std::size_t j = i + 1; j < n; ++j) cur[j] = std::max(cur[j], cur[i]);
    chain.push_back(unsort(cur));
  }
  return chain;
}

/**
 * Raises φ to 1 on its ξ-level set while keeping it unchanged below δ:
 *
 *   ψ(x) = φ(x)            if φ(x) <= δ
 *          κ(φ(x)) φ(x)    if δ <= φ(x) <= ξ
 *          1               if φ(x) >= ξ
 *
 * where κ is affine on [δ, ξ] with κ(δ) = 1 and κ(ξ) = 1/ξ. ψ = h∘φ for a
 * continuous nondecreasing h with h(t) >= t, so ψ >= φ and ψ is comonotone
 * with φ.
 */
inline FnVec level_raise(const FnVec& phi, double delta, double xi) {
  if (!(delta >= 0.0 && delta < xi && xi < 1.0)) {
    throw PreconditionError("level_raise needs 0 <= delta < xi < 1");
  }
  const double slope = (1.0 / xi - 1.0) / (xi - delta);
  return pointwise(phi, [&](double t) {
    if (t <= delta) return t;
    if (t >= xi) return 1.0;
    const double kappa = 1.0 + (t - delta) * slope;
    return std::min(1.0, kappa * t);
  });
}

/**
 * For ψ <= φ and c < d, a function ξ with
 *
 *   ξ ∧ c_X = φ ∧ c_X   and   ξ ∨ d_X = ψ ∨ d_X.
 *
 * ξ = φ where φ <= c, ξ = ψ where ψ >= d, and elsewhere φ clamped to [c, d].
 * (The two prescribed regions are disjoint because ψ <= φ.)
 */
inline FnVec squeeze_witness(const FnVec& phi, const FnVec& psi, double c, double d) {
  require_same_size(phi, psi);
  check_unit(c, "c");
  check_unit(d, "d");
  if (!(c < d)) throw PreconditionError("squeeze_witness needs c < d");
  if (!pointwise_leq(psi, phi)) throw PreconditionError("squeeze_witness needs psi <= phi");
  std::vector<double> out(phi.size());
  for (std::size_t x = 0; x < phi.size(); ++x) {
    if (phi[x] <= c) out[x] = phi[x];
    else if (psi[x] >= d) out[x] = psi[x];
    else out[x] = std::clamp(std::max(psi[x], phi[x]), c, d);
  }
  return FnVec(std::move(out));
}

}  // namespace tnint
