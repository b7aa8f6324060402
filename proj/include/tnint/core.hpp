/**
 * @brief Basic value types shared by every tnint header: unit-interval
 * functions on a finite point space, subsets of that space, value grids
 * and the error types.
 */
#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tnint {

/// Absolute tolerance used whenever two computed unit-values are compared.
inline constexpr double kTolerance = 1e-9;

/// Largest point count a Capacity (2^n stored values) accepts.
inline constexpr std::size_t kMaxPoints = 20;

/// Malformed or out-of-range input (bad JSON, wrong sizes, values outside [0,1]).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline double check_unit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw InputError(std::string(what) + ": value " + std::to_string(v) +
                     " is outside [0,1]");
  }
  return v;
}

inline bool approx_equal(double a, double b, double tol = kTolerance) {
  return std::abs(a - b) <= tol;
}

/**
 * A function X -> [0,1] on the n-point space X = {0, ..., n-1}.
 *
 * Always non-empty with every entry in [0,1]; constructors throw
 * InputError otherwise.
 */
class FnVec {
 public:
  explicit FnVec(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw InputError("function vector must have at least one point");
    for (double v : values_) check_unit(v, "function vector");
  }
  FnVec(std::initializer_list<double> values) : FnVec(std::vector<double>(values)) {}

  /// The constant function c_X.
  static FnVec constant(std::size_t n, double c) {
    return FnVec(std::vector<double>(n, check_unit(c, "constant")));
  }

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const { return values_; }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  double max() const { return *std::max_element(values_.begin(), values_.end()); }
  double min() const { return *std::min_element(values_.begin(), values_.end()); }

  friend bool operator==(const FnVec&, const FnVec&) = default;

 private:
  std::vector<double> values_;
};

inline void require_same_size(const FnVec& f, const FnVec& g) {
  if (f.size() != g.size()) {
    throw InputError("function vectors have different lengths (" + std::to_string(f.size()) +
                     " vs " + std::to_string(g.size()) + ")");
  }
}

template <typename Op>
FnVec pointwise(const FnVec& f, const FnVec& g, Op op) {
  require_same_size(f, g);
  std::vector<double> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = op(f[i], g[i]);
  return FnVec(std::move(out));
}

template <typename Op>
FnVec pointwise(const FnVec& f, Op op) {
  std::vector<double> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = op(f[i]);
  return FnVec(std::move(out));
}

/// f ∨ g
inline FnVec join(const FnVec& f, const FnVec& g) {
  return pointwise(f, g, [](double a, double b) { return std::max(a, b); });
}
/// f ∧ g
inline FnVec meet(const FnVec& f, const FnVec& g) {
  return pointwise(f, g, [](double a, double b) { return std::min(a, b); });
}
/// c_X ∨ f
inline FnVec join(double c, const FnVec& f) {
  check_unit(c, "constant");
  return pointwise(f, [c](double a) { return std::max(a, c); });
}
/// c_X ∧ f
inline FnVec meet(double c, const FnVec& f) {
  check_unit(c, "constant");
  return pointwise(f, [c](double a) { return std::min(a, c); });
}
/// c_X · f
inline FnVec scale(double c, const FnVec& f) {
  check_unit(c, "constant");
  return pointwise(f, [c](double a) { return c * a; });
}

/// Pointwise f <= g (exact).
inline bool pointwise_leq(const FnVec& f, const FnVec& g) {
  require_same_size(f, g);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] > g[i]) return false;
  return true;
}

inline bool approx_equal(const FnVec& f, const FnVec& g, double tol = kTolerance) {
  if (f.size() != g.size()) return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!approx_equal(f[i], g[i], tol)) return false;
  return true;
}

/// A subset of {0, ..., n-1}, stored as a bitmask over point indices.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

  static constexpr Subset full(std::size_t n) {
    return Subset(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }
  static Subset of(std::initializer_list<std::size_t> points) {
    Subset s;
    for (auto p : points) s = s.with(p);
    return s;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  constexpr Subset with(std::size_t i) const { return Subset(bits_ | (std::uint32_t{1} << i)); }
  constexpr Subset without(std::size_t i) const { return Subset(bits_ & ~(std::uint32_t{1} << i)); }
  constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  int size() const { return std::popcount(bits_); }

  /// Largest point index + 1 mentioned by the subset.
  std::size_t span_hint() const { return 32 - std::countl_zero(bits_); }

  std::vector<std::size_t> points() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < 32; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset, Subset) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// A finite list of admissible unit-values, e.g. {0, 1/4, 1/2, 3/4, 1}.
using ValueGrid = std::vector<double>;

/// {0, 1/denominator, ..., 1}, each entry computed as k/denominator.
inline ValueGrid uniform_grid(int denominator) {
  if (denominator < 1) throw InputError("grid denominator must be positive");
  ValueGrid grid(static_cast<std::size_t>(denominator) + 1);
  for (int k = 0; k <= denominator; ++k) grid[k] = static_cast<double>(k) / denominator;
  return grid;
}

}  // namespace tnint
