/**
 * @brief t-normed integrals on finite spaces and the Functional abstraction.
 */
#pragma once

#include <functional>
#include <optional>
#include <string>

#include "capacity.hpp"
#include "tnorm.hpp"

namespace tnint {

/**
 * ∫ f dν = max_t ν(f_t) ∗ t, computed exactly.
 *
 * t ↦ ν(f_t) is a left-continuous step function, constant on each interval
 * (v_{k-1}, v_k] between consecutive values of f, and ∗ is monotone, so the
 * supremum over [0,1] is attained at some value of f. t = 0 contributes
 * ν(X) ∗ 0 = 0.
 */
inline double tnormed_integral(const Capacity& nu, const FnVec& f, const TNorm& op) {
  if (nu.n() != f.size()) {
    throw InputError("capacity has " + std::to_string(nu.n()) + " points but function has " +
                     std::to_string(f.size()));
  }
  double best = 0.0;
  for (double t : f) best = std::max(best, op.apply(nu(upper_level_set(f, t)), t));
  return best;
}

/// Same formula with t restricted to {0, step, 2 step, ..., 1}. Used as an
/// independent oracle for tnormed_integral.
inline double tnormed_integral_grid(const Capacity& nu, const FnVec& f, const TNorm& op,
                                    double step) {
  if (nu.n() != f.size()) throw InputError("capacity and function dimensions differ");
  if (!(step > 0.0 && step <= 0.1)) throw InputError("oracle step must be in (0, 0.1]");
  // When 1/step is an integer N, use t = k/N so grid points are the exact
  // doubles of the corresponding decimals.
  const double inv = 1.0 / step;
  const double rounded = std::round(inv);
  const bool integral_steps = std::abs(inv - rounded) <= 1e-9 * inv;
  const long count = integral_steps ? static_cast<long>(rounded)
                                    : static_cast<long>(std::floor(inv));
  double best = 0.0;
  for (long k = 0; k <= count; ++k) {
    double t = integral_steps ? static_cast<double>(k) / count : k * step;
    best = std::max(best, op.apply(nu(upper_level_set(f, t)), t));
  }
  if (!integral_steps) best = std::max(best, op.apply(nu(upper_level_set(f, 1.0)), 1.0));
  return best;
}

/**
 * A functional C(X,[0,1]) -> [0,1] given as a black box.
 *
 * `domain` restricts where the evaluator may be called; an empty domain
 * means total.
 */
struct Functional {
  std::size_t n = 0;
  std::function<double(const FnVec&)> evaluator;
  std::function<bool(const FnVec&)> domain;
  std::string label;

  bool total() const { return !domain; }
  bool in_domain(const FnVec& f) const { return f.size() == n && (!domain || domain(f)); }

  double operator()(const FnVec& f) const {
    if (f.size() != n) throw InputError("functional evaluated on a vector of the wrong length");
    return evaluator(f);
  }
};

/// The t-normed integral with respect to ν, as a total Functional.
inline Functional integral_functional(const Capacity& nu, const TNorm& op) {
  if (!is_capacity(nu)) throw InputError("integral_functional needs a valid capacity");
  Functional fn;
  fn.n = nu.n();
  fn.evaluator = [nu, op](const FnVec& f) { return tnormed_integral(nu, f, op); };
  fn.label = op.name() + "-integral on " + std::to_string(nu.n()) + " points";
  return fn;
}

}  // namespace tnint
