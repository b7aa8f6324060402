/**
 * @brief Capacities (monotone normalized set functions) on an n-point space.
 *
 * On a finite discrete space every subset is closed and the
 * upper-semicontinuity condition holds trivially, so a capacity is just a
 * table of 2^n values indexed by subset bitmask.
 */
#pragma once

#include <functional>
#include <vector>

#include "core.hpp"
#include "random.hpp"
#include "report.hpp"

namespace tnint {

/**
 * A set function on the subsets of {0, ..., n-1}.
 *
 * Construction only checks shape and that values are unit-values. The
 * capacity axioms (boundary, monotonicity) are left to validate().
 */
class Capacity {
 public:
  Capacity(std::size_t n, std::vector<double> values) : n_(n), values_(std::move(values)) {
    if (n_ < 1 || n_ > kMaxPoints) {
      throw InputError("capacity point count must be in [1, " + std::to_string(kMaxPoints) + "]");
    }
    if (values_.size() != (std::size_t{1} << n_)) {
      throw InputError("capacity on " + std::to_string(n_) + " points needs " +
                       std::to_string(std::size_t{1} << n_) + " subset values, got " +
                       std::to_string(values_.size()));
    }
    for (double v : values_) check_unit(v, "capacity value");
  }

  static Capacity from_function(std::size_t n, const std::function<double(Subset)>& fn) {
    std::vector<double> values(std::size_t{1} << n);
    for (std::uint32_t s = 0; s < values.size(); ++s) values[s] = fn(Subset(s));
    return Capacity(n, std::move(values));
  }

  /// The capacity concentrated at one point: 1 on sets containing it.
  static Capacity dirac(std::size_t n, std::size_t point) {
    return from_function(n, [point](Subset s) { return s.contains(point) ? 1.0 : 0.0; });
  }

  std::size_t n() const { return n_; }
  std::size_t subset_count() const { return values_.size(); }
  Subset full() const { return Subset::full(n_); }
  const std::vector<double>& values() const { return values_; }

  double operator()(Subset s) const {
    if (s.bits() >= values_.size()) throw InputError("subset has points outside the space");
    return values_[s.bits()];
  }

  friend bool operator==(const Capacity&, const Capacity&) = default;

 private:
  std::size_t n_;
  std::vector<double> values_;
};

/// True iff ν1 and ν2 agree on every subset within `tol`.
inline bool approx_equal(const Capacity& a, const Capacity& b, double tol = kTolerance) {
  if (a.n() != b.n()) return false;
  for (std::size_t s = 0; s < a.subset_count(); ++s)
    if (!approx_equal(a.values()[s], b.values()[s], tol)) return false;
  return true;
}

/**
 * Checks ν(∅)=0, ν(X)=1 and monotonicity under inclusion.
 *
 * Monotonicity is tested on covering pairs (S \ {i}, S) only, which implies
 * it for all nested pairs.
 */
inline Report validate(const Capacity& nu, double tol = kTolerance) {
  Report report;
  report.subject = "capacity on " + std::to_string(nu.n()) + " points";

  CheckBuilder boundary("boundary");
  const Subset full = nu.full();
  boundary.record(approx_equal(nu(Subset{}), 0.0, tol),
                  [&] { return json{{"subset", json::array()}, {"value", nu(Subset{})}, {"expected", 0.0}}; });
  boundary.record(approx_equal(nu(full), 1.0, tol),
                  [&] { return json{{"subset", full.points()}, {"value", nu(full)}, {"expected", 1.0}}; });
  report.checks.push_back(boundary.finish());

  CheckBuilder mono("monotonicity");
  for (std::uint32_t bits = 1; bits < nu.subset_count(); ++bits) {
    const Subset big(bits);
    for (std::size_t i = 0; i < nu.n(); ++i) {
      if (!big.contains(i)) continue;
      const Subset small = big.without(i);
      mono.record(nu(small) <= nu(big) + tol, [&] {
        return json{{"smaller", small.points()}, {"larger", big.points()},
                    {"smaller_value", nu(small)}, {"larger_value", nu(big)}};
      });
    }
  }
  report.checks.push_back(mono.finish());
  return report;
}

inline bool is_capacity(const Capacity& nu, double tol = kTolerance) {
  return validate(nu, tol).passed();
}

/// f_t = {x : f(x) >= t}
inline Subset upper_level_set(const FnVec& f, double t) {
  check_unit(t, "level");
  Subset s;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] >= t) s = s.with(i);
  return s;
}

/// χ_A on n points.
inline FnVec characteristic(Subset a, std::size_t n) {
  if (n < 1 || n > kMaxPoints) throw InputError("point count out of range");
  if (!a.is_subset_of(Subset::full(n))) {
    throw InputError("subset mentions a point index >= " + std::to_string(n));
  }
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = a.contains(i) ? 1.0 : 0.0;
  return FnVec(std::move(v));
}

namespace detail {

inline void check_enumeration_args(std::size_t n, const ValueGrid& grid, std::size_t max_n) {
  if (n < 1) throw InputError("point count must be at least 1");
  if (n > max_n) {
    throw InputError("point count " + std::to_string(n) + " too large (at most " +
                     std::to_string(max_n) + ")");
  }
  bool has0 = false, has1 = false;
  for (double v : grid) {
    check_unit(v, "value grid");
    has0 = has0 || v == 0.0;
    has1 = has1 || v == 1.0;
  }
  if (!has0 || !has1) throw InputError("value grid must contain 0 and 1");
}

inline ValueGrid sorted_unique(ValueGrid grid) {
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace detail

inline constexpr std::size_t kMaxEnumerationPoints = 4;

/**
 * Calls `visit` once for every capacity whose values all lie in `grid`.
 *
 * Order is lexicographic over (subset index, grid index): subsets are
 * assigned in increasing bitmask order, the lowest index varying slowest,
 * each trying grid values in increasing order. Since every proper subset of
 * S has a smaller bitmask, monotonicity is enforced incrementally.
 */
inline void for_each_capacity(std::size_t n, const ValueGrid& value_grid,
                              const std::function<void(const Capacity&)>& visit) {
  detail::check_enumeration_args(n, value_grid, kMaxEnumerationPoints);
  const ValueGrid grid = detail::sorted_unique(value_grid);
  const std::uint32_t count = std::uint32_t{1} << n;
  const std::uint32_t top = count - 1;
  std::vector<double> values(count, 0.0);
  values[top] = 1.0;

  std::function<void(std::uint32_t)> assign = [&](std::uint32_t s) {
    if (s == top) {
      visit(Capacity(n, values));
      return;
    }
    double floor = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if ((s >> i) & 1u) floor = std::max(floor, values[s & ~(1u << i)]);
    for (double v : grid) {
      if (v < floor) continue;
      values[s] = v;
      assign(s + 1);
    }
  };
  assign(1);
}

inline std::vector<Capacity> enumerate_capacities(std::size_t n, const ValueGrid& grid) {
  std::vector<Capacity> out;
  for_each_capacity(n, grid, [&](const Capacity& c) { out.push_back(c); });
  return out;
}

/**
 * A random capacity with values in `grid`, deterministic in `seed`.
 *
 * Subsets are filled in bitmask order, each drawing uniformly among the grid
 * values not below its immediate subsets. Not uniform over capacities.
 */
inline Capacity random_capacity(std::size_t n, const ValueGrid& value_grid, std::uint64_t seed) {
  detail::check_enumeration_args(n, value_grid, kMaxPoints);
  const ValueGrid grid = detail::sorted_unique(value_grid);
  Rng rng(seed);
  const std::uint32_t count = std::uint32_t{1} << n;
  std::vector<double> values(count, 0.0);
  values[count - 1] = 1.0;
  for (std::uint32_t s = 1; s + 1 < count; ++s) {
    double floor = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if ((s >> i) & 1u) floor = std::max(floor, values[s & ~(1u << i)]);
    auto first = std::lower_bound(grid.begin(), grid.end(), floor);
    values[s] = *(first + static_cast<std::ptrdiff_t>(rng.index(grid.end() - first)));
  }
  return Capacity(n, std::move(values));
}

}  // namespace tnint
