/**
 * @brief Recovering a capacity from a functional, and round-trip checks of
 * the characterization theorems for t-normed integrals on finite spaces.
 */
#pragma once

#include "capacity.hpp"
#include "functional.hpp"
#include "integral.hpp"

namespace tnint {

/// f ∈ Υ_A, i.e. f = 1 on every point of A. Every f is in Υ_∅.
inline bool in_upsilon(const FnVec& f, Subset a) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (a.contains(i) && f[i] != 1.0) return false;
  return a.is_subset_of(Subset::full(f.size()));
}

struct Reconstruction {
  Capacity capacity;
  Report validation;
};

/**
 * ν(A) = inf{ I(φ) : φ ∈ Υ_A }, ν(∅) = 0.
 *
 * On a finite discrete space χ_A ∈ Υ_A is the pointwise least element, so for
 * a functional monotone on characteristic functions the infimum is I(χ_A).
 * Monotonicity is the caller's assumption; a violation shows up in the
 * returned validation report.
 */
inline Reconstruction reconstruct_capacity(const Functional& fn) {
  if (!fn.total()) throw PreconditionError("reconstruct_capacity needs a total functional");
  Capacity nu = Capacity::from_function(fn.n, [&](Subset a) {
    return a.empty() ? 0.0 : fn(characteristic(a, fn.n));
  });
  Report validation = validate(nu);
  return {std::move(nu), std::move(validation)};
}

namespace detail {

inline Check capacity_agreement(const Capacity& expected, const Capacity& actual, double tol) {
  CheckBuilder b("reconstruction");
  for (std::uint32_t s = 0; s < expected.subset_count(); ++s) {
    const Subset a(s);
    b.record(approx_equal(expected(a), actual(a), tol), [&] {
      return json{{"subset", a.points()}, {"expected", expected(a)}, {"reconstructed", actual(a)}};
    });
  }
  return b.finish();
}

/// I(f) against the integral w.r.t. the reconstructed capacity, on the
/// characteristic functions, constants and random grid vectors.
inline Check reintegration(const Functional& fn, const Capacity& rebuilt, const TNorm& op,
                           const SamplingOptions& opts) {
  CheckBuilder b("reintegration");
  auto one = [&](const FnVec& f) {
    const double direct = fn(f);
    const double via = tnormed_integral(rebuilt, f, op);
    b.record(approx_equal(direct, via, opts.tolerance), [&] {
      return json{{"f", to_json(f)}, {"I(f)", direct}, {"integral_of_reconstruction", via}};
    });
  };
  const ValueGrid grid = uniform_grid(opts.grid);
  for (std::uint32_t s = 0; s < rebuilt.subset_count(); ++s) one(characteristic(Subset(s), fn.n));
  for (double c : grid) one(FnVec::constant(fn.n, c));
  for (std::size_t i = 0; i < opts.samples; ++i) {
    Rng r(derive_seed(opts.seed, 0x5e, i));
    one(r.grid_vector(fn.n, grid));
  }
  return b.finish();
}

inline void add_round_trip(Report& report, const Functional& fn, const Capacity& nu,
                           const TNorm& op, const SamplingOptions& opts) {
  Reconstruction rebuilt = reconstruct_capacity(fn);
  Check valid;
  valid.name = "reconstruction_is_capacity";
  valid.samples = 1;
  valid.verdict = rebuilt.validation.passed() ? Verdict::pass : Verdict::fail;
  valid.failures = valid.verdict == Verdict::fail ? 1 : 0;
  if (valid.failures) valid.witness = to_json(rebuilt.validation);
  report.checks.push_back(std::move(valid));
  report.checks.push_back(capacity_agreement(nu, rebuilt.capacity, opts.tolerance));
  report.checks.push_back(reintegration(fn, rebuilt.capacity, op, opts));
}

}  // namespace detail

/**
 * For I = ∫ · dν with t-norm `op`: (a) I is normed, comonotonically maxitive
 * and ∗-homogeneous on samples; (b) reconstructing a capacity from I gives ν
 * back on every subset; (c) integrating w.r.t. the reconstruction reproduces I.
 */
inline Report verify_characterization(const Capacity& nu, const TNorm& op,
                                      const SamplingOptions& opts = {}) {
  const Functional fn = integral_functional(nu, op);
  Report report = check_axioms(
      fn, {AxiomKind::normed(), AxiomKind::comonotone_maxitive(), AxiomKind::star_homogeneous(op)},
      opts);
  report.subject = "characterization round trip, " + fn.label;
  detail::add_round_trip(report, fn, nu, op, opts);
  return report;
}

/**
 * Sugeno case: only ∨- and ∧-homogeneity are sampled (normedness, which
 * they imply, is checked as well), then the same round trip with the
 * minimum t-norm.
 */
inline Report verify_sugeno_simplification(const Capacity& nu, const SamplingOptions& opts = {}) {
  const TNorm op = TNorm::minimum();
  const Functional fn = integral_functional(nu, op);
  Report report = check_axioms(
      fn, {AxiomKind::vee_homogeneous(), AxiomKind::wedge_homogeneous(), AxiomKind::normed()},
      opts);
  report.subject = "Sugeno two-homogeneity round trip, " + fn.label;
  detail::add_round_trip(report, fn, nu, op, opts);
  return report;
}

}  // namespace tnint
