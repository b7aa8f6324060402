/**
 * @brief Finitely generated (∨,·)-subspaces of C(X,[0,1]), functionals on
 * them that are ∨- and ·-homogeneous by construction, the one-step
 * extension of such a functional to a new function, and the three-point
 * functional that is monotone and ∨-/·-homogeneous but not comonotonically
 * maxitive.
 */
#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "comonotone.hpp"
#include "functional.hpp"
#include "integral.hpp"
#include "report.hpp"

namespace tnint {

/// The function d ∨ (c · g_index).
struct SubspaceElement {
  double d = 0.0;
  double c = 0.0;
  std::size_t index = 0;
};

/**
 * All functions d ∨ (c · g_i) for d, c ∈ [0,1] and generators g_i, together
 * with the functional d ∨ (c · g_i) ↦ d ∨ (c · m_i).
 *
 * The family contains the constants (c = 0) and is closed under c ∨ · and
 * c · ·, since d' ∨ (c' · (d ∨ c g)) = (d' ∨ c'd) ∨ (c'c) g. With no
 * generators it is exactly the constants.
 */
class GenSubspace {
 public:
  GenSubspace(std::size_t n, std::vector<FnVec> generators, std::vector<double> assigned)
      : n_(n), generators_(std::move(generators)), assigned_(std::move(assigned)) {
    if (n_ < 1) throw InputError("subspace needs at least one point");
    if (generators_.size() != assigned_.size()) {
      throw InputError("subspace needs one assigned value per generator");
    }
    for (const auto& g : generators_)
      if (g.size() != n_) throw InputError("generator length differs from point count");
    for (double m : assigned_) check_unit(m, "assigned value");
  }

  static GenSubspace constants_only(std::size_t n) { return GenSubspace(n, {}, {}); }

  std::size_t n() const { return n_; }
  std::size_t size() const { return generators_.size(); }
  const std::vector<FnVec>& generators() const { return generators_; }
  const std::vector<double>& assigned() const { return assigned_; }

  void check(const SubspaceElement& e) const {
    check_unit(e.d, "element d");
    check_unit(e.c, "element c");
    if (generators_.empty() ? e.c != 0.0 : e.index >= generators_.size()) {
      throw InputError("element refers to generator " + std::to_string(e.index) + " but the "
                       "subspace has " + std::to_string(generators_.size()));
    }
  }

 private:
  std::size_t n_;
  std::vector<FnVec> generators_;
  std::vector<double> assigned_;
};

inline FnVec element_to_fnvec(const GenSubspace& s, const SubspaceElement& e) {
  s.check(e);
  if (e.c == 0.0) return FnVec::constant(s.n(), e.d);
  const FnVec& g = s.generators()[e.index];
  return pointwise(g, [&](double v) { return std::max(e.d, e.c * v); });
}

/// d ∨ (c · m_i)
inline double eval_subspace_functional(const GenSubspace& s, const SubspaceElement& e) {
  s.check(e);
  if (e.c == 0.0) return e.d;
  return std::max(e.d, e.c * s.assigned()[e.index]);
}

/**
 * Finds an element realizing f, if any.
 *
 * Exact: a constant f is (f, 0, ·). Otherwise f = d ∨ (c g) forces c = f(x*)/g(x*)
 * at a maximizer x* of g, and d can be taken as min f; both are then checked
 * pointwise within `tol`. Generators are tried in order.
 */
inline std::optional<SubspaceElement> resolve(const GenSubspace& s, const FnVec& f,
                                              double tol = kTolerance) {
  if (f.size() != s.n()) return std::nullopt;
  const double lo = f.min();
  if (f.max() - lo <= tol) return SubspaceElement{f[0], 0.0, 0};
  for (std::size_t i = 0; i < s.size(); ++i) {
    const FnVec& g = s.generators()[i];
    const std::size_t top = static_cast<std::size_t>(std::max_element(g.begin(), g.end()) - g.begin());
    if (g[top] <= 0.0) continue;
    double c = f[top] / g[top];
    if (c > 1.0 + tol) continue;
    c = std::min(c, 1.0);
    bool match = true;
    for (std::size_t x = 0; x < f.size() && match; ++x)
      match = approx_equal(std::max(lo, c * g[x]), f[x], tol);
    if (match) return SubspaceElement{lo, c, i};
  }
  return std::nullopt;
}

/// The functional on the subspace, with domain "realizable as an element".
inline Functional subspace_functional(const GenSubspace& s, std::string label = "subspace functional") {
  Functional fn;
  fn.n = s.n();
  fn.domain = [s](const FnVec& f) { return resolve(s, f).has_value(); };
  fn.evaluator = [s](const FnVec& f) {
    auto e = resolve(s, f);
    if (!e) throw PreconditionError("function is not in the subspace");
    return eval_subspace_functional(s, *e);
  };
  fn.label = std::move(label);
  return fn;
}

/// Every element d ∨ (c g_i) with d, c on the grid {0, 1/denominator, ..., 1}.
inline std::vector<SubspaceElement> grid_elements(const GenSubspace& s, int denominator) {
  if (denominator < 1) throw InputError("grid denominator must be positive");
  const ValueGrid grid = uniform_grid(denominator);
  std::vector<SubspaceElement> out;
  if (s.size() == 0) {
    for (double d : grid) out.push_back({d, 0.0, 0});
    return out;
  }
  out.reserve(s.size() * grid.size() * grid.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (double d : grid)
      for (double c : grid) out.push_back({d, c, i});
  return out;
}

inline json to_json(const SubspaceElement& e) {
  return json{{"d", e.d}, {"c", e.c}, {"generator", e.index}};
}

/**
 * Enumerates grid elements of every generator; whenever two of them realize
 * the same function (within 1e-9) their assigned values must agree within
 * `tol`. The witness is the disagreeing pair with the largest gap.
 */
inline Report well_definedness_check(const GenSubspace& s, int denominator = 60,
                                     double tol = kTolerance) {
  struct Seen {
    FnVec f;
    double value;
    SubspaceElement element;
  };
  // Bucket on a coarse rounding; exact comparison happens inside the bucket.
  std::map<std::vector<long long>, std::vector<Seen>> buckets;
  const auto elements = grid_elements(s, denominator);
  std::size_t compared = 0, failures = 0, distinct = 0;
  double worst = -1.0;
  json witness;

  for (const auto& e : elements) {
    FnVec f = element_to_fnvec(s, e);
    const double value = eval_subspace_functional(s, e);
    std::vector<long long> key(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) key[x] = std::llround(f[x] * 1e7);
    auto& bucket = buckets[key];
    auto same = std::find_if(bucket.begin(), bucket.end(),
                             [&](const Seen& seen) { return approx_equal(seen.f, f, kTolerance); });
    if (same == bucket.end()) {
      bucket.push_back({std::move(f), value, e});
      ++distinct;
      continue;
    }
    ++compared;
    const double gap = std::abs(same->value - value);
    if (gap <= tol) continue;
    ++failures;
    if (gap > worst) {
      worst = gap;
      witness = json{{"function", to_json(f)},
                     {"first", to_json(same->element)},
                     {"first_value", same->value},
                     {"second", to_json(e)},
                     {"second_value", value}};
    }
  }

  Check check;
  check.name = "well_defined";
  check.samples = compared;
  check.failures = failures;
  check.verdict = failures > 0 ? Verdict::fail : compared > 0 ? Verdict::pass : Verdict::inconclusive;
  check.witness = std::move(witness);
  check.detail = json{{"elements", elements.size()},
                      {"distinct_functions", distinct},
                      {"grid_step", 1.0 / denominator}};
  Report report;
  report.subject = "well-definedness of subspace functional";
  report.checks.push_back(std::move(check));
  return report;
}

/**
 * Exhaustive check over the grid elements of the subspace functional:
 * monotone on every comparable pair, ∨-homogeneous and ·-homogeneous for
 * every grid constant. Homogeneity goes through the Functional, i.e. the
 * lifted function is resolved back to an element before evaluation.
 */
inline Report subspace_axiom_sweep(const GenSubspace& s, int denominator = 60,
                                   double tol = kTolerance) {
  const auto elements = grid_elements(s, denominator);
  const ValueGrid grid = uniform_grid(denominator);
  const Functional fn = subspace_functional(s);

  // Dedupe functions for the pair sweep; keep the first representative.
  std::vector<FnVec> funcs;
  std::vector<double> values;
  {
    std::map<std::vector<long long>, std::size_t> index;
    for (const auto& e : elements) {
      FnVec f = element_to_fnvec(s, e);
      std::vector<long long> key(f.size());
      for (std::size_t x = 0; x < f.size(); ++x) key[x] = std::llround(f[x] * 1e9);
      if (index.emplace(key, funcs.size()).second) {
        funcs.push_back(std::move(f));
        values.push_back(eval_subspace_functional(s, e));
      }
    }
  }

  Report report;
  report.subject = "axiom sweep over subspace grid elements";

  CheckBuilder mono("monotone");
  const std::size_t n = s.n();
  std::vector<double> flat(funcs.size() * n);
  for (std::size_t k = 0; k < funcs.size(); ++k)
    for (std::size_t x = 0; x < n; ++x) flat[k * n + x] = funcs[k][x];
  for (std::size_t p = 0; p < funcs.size(); ++p) {
    const double* fp = &flat[p * n];
    for (std::size_t q = 0; q < funcs.size(); ++q) {
      if (p == q) continue;
      const double* fq = &flat[q * n];
      bool leq = true;
      for (std::size_t x = 0; x < n && leq; ++x) leq = fp[x] <= fq[x];
      if (!leq) continue;
      mono.record(values[p] <= values[q] + tol, [&] {
        return json{{"f", to_json(funcs[p])}, {"g", to_json(funcs[q])},
                    {"I(f)", values[p]}, {"I(g)", values[q]}};
      });
    }
  }
  report.checks.push_back(mono.finish());

  auto homogeneity = [&](const char* name, auto lift, auto combine) {
    CheckBuilder b(name);
    for (std::size_t k = 0; k < funcs.size(); ++k) {
      for (double c : grid) {
        const FnVec lifted = lift(c, funcs[k]);
        if (!fn.in_domain(lifted)) {
          b.violation(json{{"c", c}, {"f", to_json(funcs[k])}, {"reason", "not closed"}});
          continue;
        }
        const double lhs = fn(lifted), rhs = combine(c, values[k]);
        b.record(approx_equal(lhs, rhs, tol), [&] {
          return json{{"c", c}, {"f", to_json(funcs[k])}, {"I(c op f)", lhs}, {"c op I(f)", rhs}};
        });
      }
    }
    report.checks.push_back(b.finish());
  };
  homogeneity("vee_homogeneous", [](double c, const FnVec& f) { return join(c, f); },
              [](double c, double v) { return std::max(c, v); });
  homogeneity("star_homogeneous(product)", [](double c, const FnVec& f) { return scale(c, f); },
              [](double c, double v) { return c * v; });
  return report;
}

/**
 * The three-point subspace H generated by
 *   φ1 = (0, 1/2, 2/3), φ2 = (1/3, 1/3, 1), φ3 = φ1 ∨ φ2 = (1/3, 1/2, 1)
 * with values m = (1/3, 1/3, 1/2).
 *
 * `literal_phi1 = true` uses φ1(2) = 1/3 instead, which makes φ3 = φ2 while
 * m3 != m2, so the functional is no longer well defined.
 */
inline GenSubspace counterexample_subspace(bool literal_phi1 = false) {
  const FnVec phi1{0.0, literal_phi1 ? 1.0 / 3.0 : 0.5, 2.0 / 3.0};
  const FnVec phi2{1.0 / 3.0, 1.0 / 3.0, 1.0};
  FnVec phi3 = join(phi1, phi2);
  return GenSubspace(3, {phi1, phi2, std::move(phi3)}, {1.0 / 3.0, 1.0 / 3.0, 0.5});
}

struct Counterexample {
  GenSubspace subspace;
  Functional functional;
};

inline Counterexample counterexample_functional() {
  GenSubspace s = counterexample_subspace();
  Functional fn = subspace_functional(s, "three-point (v,.)-homogeneous counterexample");
  return {std::move(s), std::move(fn)};
}

/// Generators first, then the grid elements (deduplicated), as a sample pool.
inline std::vector<FnVec> subspace_pool(const GenSubspace& s, int denominator) {
  std::vector<FnVec> pool(s.generators().begin(), s.generators().end());
  for (const auto& e : grid_elements(s, denominator)) {
    FnVec f = element_to_fnvec(s, e);
    bool dup = false;
    for (const auto& p : pool)
      if (approx_equal(p, f)) { dup = true; break; }
    if (!dup) pool.push_back(std::move(f));
  }
  return pool;
}

/**
 * inf over c ∈ (0,1] and elements ψ ≥ c·φ of I(ψ)/c, with c and the element
 * parameters restricted to the grid {k/denominator}. This is an infimum over
 * a finite subset of the admissible pairs, hence an upper bound on the full
 * infimum; refining the grid can only lower it.
 *
 * For fixed (c, g_i, c') the cheapest admissible d' is the smallest grid
 * value covering c·φ wherever c'·g_i falls short.
 */
inline double extension_infimum(const GenSubspace& s, const FnVec& phi, int denominator) {
  if (denominator < 1) throw InputError("extension grid denominator must be positive");
  if (phi.size() != s.n()) throw InputError("function length differs from subspace point count");
  const double N = denominator;
  auto ceil_grid = [&](double v) {
    return std::min(1.0, std::ceil(v * N - 1e-9) / N);
  };
  double best = 1.0;
  std::vector<double> target(s.n());
  for (int kc = 1; kc <= denominator; ++kc) {
    const double c = kc / N;
    for (std::size_t x = 0; x < s.n(); ++x) target[x] = c * phi[x];
    // Constants.
    best = std::min(best, ceil_grid(*std::max_element(target.begin(), target.end())) / c);
    for (std::size_t i = 0; i < s.size(); ++i) {
      const FnVec& g = s.generators()[i];
      for (int kc2 = 1; kc2 <= denominator; ++kc2) {
        const double c2 = kc2 / N;
        double need = 0.0;
        for (std::size_t x = 0; x < s.n(); ++x)
          if (c2 * g[x] < target[x] - 1e-12) need = std::max(need, target[x]);
        const double d = ceil_grid(need);
        best = std::min(best, std::max(d, c2 * s.assigned()[i]) / c);
      }
    }
  }
  return std::clamp(best, 0.0, 1.0);
}

struct ExtensionResult {
  GenSubspace subspace;
  bool extended = false;   // false when φ was already realizable
  double a = 0.0;          // value assigned to φ (refined grid)
  double a_coarse = 0.0;   // infimum on the 1/denominator grid
  double a_refined = 0.0;  // infimum on the 1/(2 denominator) grid
  bool refinement_agrees = true;  // a_coarse - a_refined <= 1/denominator
};

/**
 * Adds φ as a new generator with value a = inf{ I(ψ)/c : c ∈ (0,1], ψ ≥ c·φ },
 * approximated on the grid and refined once. The result is a new subspace;
 * `s` is not modified. If φ is already an element, `s` is returned with a
 * set to its current value.
 */
inline ExtensionResult extend_one_step(const GenSubspace& s, const FnVec& phi, int denominator = 60) {
  if (denominator < 1) throw InputError("extension grid denominator must be positive");
  if (phi.size() != s.n()) throw InputError("function length differs from subspace point count");
  if (auto e = resolve(s, phi)) {
    const double v = eval_subspace_functional(s, *e);
    return {s, false, v, v, v, true};
  }
  const double coarse = extension_infimum(s, phi, denominator);
  const double fine = extension_infimum(s, phi, 2 * denominator);
  auto generators = s.generators();
  auto assigned = s.assigned();
  generators.push_back(phi);
  assigned.push_back(fine);
  return {GenSubspace(s.n(), std::move(generators), std::move(assigned)), true, fine, coarse, fine,
          coarse - fine <= 1.0 / denominator + kTolerance};
}

/// Outcome of the full three-point verification.
struct CounterexampleReport {
  Report report;
  double mu_phi1 = 0, mu_phi2 = 0, mu_join = 0;
  bool expected_outcomes = false;  // every check came out as the construction predicts
  std::string summary;
};

namespace detail {
inline std::string fraction(double v) {
  for (int q = 1; q <= 1000; ++q) {
    const double p = std::round(v * q);
    if (std::abs(v - p / q) <= 1e-12) {
      return q == 1 ? std::to_string(static_cast<long>(p))
                    : std::to_string(static_cast<long>(p)) + "/" + std::to_string(q);
    }
  }
  json j = v;
  return j.dump();
}

inline Check exact_value(const std::string& name, double value, double expected) {
  Check c;
  c.name = name;
  c.samples = 1;
  c.verdict = std::abs(value - expected) <= 1e-12 ? Verdict::pass : Verdict::fail;
  c.failures = c.verdict == Verdict::fail ? 1 : 0;
  c.detail = json{{"value", value}, {"expected", expected}};
  return c;
}
}  // namespace detail

/**
 * Runs the whole three-point verification at grid step 1/denominator: exact
 * values on φ1, φ2, φ1 ∨ φ2; comonotonicity of φ1, φ2; well-definedness;
 * exhaustive monotone / ∨- / ·-homogeneity sweep; comonotone maxitivity
 * (expected to FAIL); and the literal-value variant (expected to be
 * ill-defined).
 */
inline CounterexampleReport verify_counterexample(int denominator = 60) {
  using detail::exact_value;
  auto [s, fn] = counterexample_functional();
  const auto& g = s.generators();
  CounterexampleReport out;
  Report& r = out.report;
  r.subject = fn.label;

  out.mu_phi1 = fn(g[0]);
  out.mu_phi2 = fn(g[1]);
  out.mu_join = fn(join(g[0], g[1]));
  r.checks.push_back(exact_value("mu(phi1)", out.mu_phi1, 1.0 / 3.0));
  r.checks.push_back(exact_value("mu(phi2)", out.mu_phi2, 1.0 / 3.0));
  r.checks.push_back(exact_value("mu(phi1 v phi2)", out.mu_join, 0.5));

  Check como;
  como.name = "phi1,phi2 comonotone";
  como.samples = 1;
  como.verdict = is_comonotone(g[0], g[1]) ? Verdict::pass : Verdict::fail;
  como.failures = como.verdict == Verdict::fail;
  r.checks.push_back(std::move(como));

  r.absorb(well_definedness_check(s, denominator));
  r.absorb(subspace_axiom_sweep(s, denominator));

  SamplingOptions opts;
  opts.pool = subspace_pool(s, 6);
  r.absorb(check_axioms(fn, {AxiomKind::comonotone_maxitive()}, opts));
  r.absorb(well_definedness_check(counterexample_subspace(true), denominator), "literal_values:");

  std::vector<std::pair<std::string, Verdict>> expected = {
      {"mu(phi1)", Verdict::pass},
      {"mu(phi2)", Verdict::pass},
      {"mu(phi1 v phi2)", Verdict::pass},
      {"phi1,phi2 comonotone", Verdict::pass},
      {"well_defined", Verdict::pass},
      {"monotone", Verdict::pass},
      {"vee_homogeneous", Verdict::pass},
      {"star_homogeneous(product)", Verdict::pass},
      {"comonotone_maxitive", Verdict::fail},
      {"literal_values:well_defined", Verdict::fail},
  };
  out.expected_outcomes = true;
  for (const auto& [name, verdict] : expected)
    out.expected_outcomes = out.expected_outcomes && r.verdict(name) == verdict;

  const double lhs = out.mu_join;
  const double rhs = std::max(out.mu_phi1, out.mu_phi2);
  out.summary = std::string("comonotone maxitivity ") +
                (approx_equal(lhs, rhs) ? "HOLDS" : "FAILS") + ": mu(f1 v f2)=" +
                detail::fraction(lhs) + ", mu(f1) v mu(f2)=" + detail::fraction(rhs);
  return out;
}

}  // namespace tnint
