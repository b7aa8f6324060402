/**
 * @brief Triangular norms: the three classical continuous t-norms, arbitrary
 * user evaluators, and a grid-sampled axiom checker.
 */
#pragma once

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <utility>

#include "core.hpp"
#include "report.hpp"

namespace tnint {

class TNorm {
 public:
  enum class Kind { minimum, product, lukasiewicz, custom };
  using Evaluator = std::function<double(double, double)>;

  static TNorm minimum() { return TNorm(Kind::minimum, "minimum", {}); }
  static TNorm product() { return TNorm(Kind::product, "product", {}); }
  static TNorm lukasiewicz() { return TNorm(Kind::lukasiewicz, "lukasiewicz", {}); }

  /// Wraps an arbitrary binary operation. Nothing about it is assumed;
  /// run check_tnorm_axioms before relying on it.
  static TNorm custom(std::string name, Evaluator fn) {
    if (!fn) throw InputError("custom t-norm needs an evaluator");
    return TNorm(Kind::custom, std::move(name), std::move(fn));
  }

  /// Built-ins by name: minimum (alias min, sugeno), product, lukasiewicz.
  static TNorm by_name(std::string_view name) {
    if (name == "minimum" || name == "min" || name == "sugeno") return minimum();
    if (name == "product" || name == "prod") return product();
    if (name == "lukasiewicz" || name == "luk") return lukasiewicz();
    throw InputError("unknown t-norm '" + std::string(name) +
                     "' (expected minimum, product or lukasiewicz)");
  }

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  /// Evaluates without range checks on inputs or output.
  double raw(double a, double b) const {
    switch (kind_) {
      case Kind::minimum: return std::min(a, b);
      case Kind::product: return a * b;
      case Kind::lukasiewicz:
        // min - (1 - max): exact whenever either argument is 1.
        return std::max(0.0, std::min(a, b) - (1.0 - std::max(a, b)));
      case Kind::custom: return fn_(a, b);
    }
    return 0.0;
  }

  double apply(double a, double b) const {
    check_unit(a, "t-norm argument");
    check_unit(b, "t-norm argument");
    double r = raw(a, b);
    if (kind_ == Kind::custom) check_unit(r, "custom t-norm result");
    return r;
  }
  double operator()(double a, double b) const { return apply(a, b); }

 private:
  TNorm(Kind kind, std::string name, Evaluator fn)
      : kind_(kind), name_(std::move(name)), fn_(std::move(fn)) {}

  Kind kind_;
  std::string name_;
  Evaluator fn_;
};

inline std::array<TNorm, 3> builtin_tnorms() {
  return {TNorm::minimum(), TNorm::product(), TNorm::lukasiewicz()};
}

/// c_X ∗ f
inline FnVec star(const TNorm& op, double c, const FnVec& f) {
  check_unit(c, "constant");
  return pointwise(f, [&](double a) { return op.apply(c, a); });
}

/**
 * Checks the t-norm axioms on the grid {0, 1/denominator, ..., 1}.
 *
 * Reported checks: range, unit, commutativity, associativity, monotonicity
 * (grid neighbours, enough by transitivity), distributivity-over-max and
 * continuity-modulus-estimate. The modulus is the largest change of the
 * operation between grid-adjacent argument pairs; it passes when it does
 * not exceed two grid steps. All equalities use kTolerance.
 */
inline Report check_tnorm_axioms(const TNorm& op, int denominator = 20) {
  if (denominator < 9) {
    throw InputError("t-norm axiom grid needs at least 10 points (denominator >= 9)");
  }
  const ValueGrid grid = uniform_grid(denominator);
  const std::size_t m = grid.size();

  // Table of raw values; out-of-range results are reported, then clamped so
  // that nested evaluations stay defined.
  std::vector<double> table(m * m);
  CheckBuilder range("range");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      double r = op.raw(grid[i], grid[j]);
      range.record(r >= 0.0 && r <= 1.0,
                   [&] { return json{{"a", grid[i]}, {"b", grid[j]}, {"value", r}}; });
      table[i * m + j] = std::clamp(r, 0.0, 1.0);
    }
  }
  auto at = [&](std::size_t i, std::size_t j) { return table[i * m + j]; };
  auto eval = [&](double a, double b) { return std::clamp(op.raw(a, b), 0.0, 1.0); };

  Report report;
  report.subject = "t-norm " + op.name();
  report.checks.push_back(range.finish());

  CheckBuilder unit("unit");
  for (std::size_t i = 0; i < m; ++i) {
    double s = grid[i];
    unit.record(approx_equal(at(i, m - 1), s) && approx_equal(at(m - 1, i), s), [&] {
      return json{{"a", s}, {"a*1", at(i, m - 1)}, {"1*a", at(m - 1, i)}};
    });
  }
  report.checks.push_back(unit.finish());

  CheckBuilder comm("commutativity");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      comm.record(approx_equal(at(i, j), at(j, i)), [&] {
        return json{{"a", grid[i]}, {"b", grid[j]}, {"a*b", at(i, j)}, {"b*a", at(j, i)}};
      });
  report.checks.push_back(comm.finish());

  CheckBuilder assoc("associativity");
  CheckBuilder distrib("distributivity-over-max");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        double left = eval(grid[i], at(j, k));
        double right = eval(at(i, j), grid[k]);
        assoc.record(approx_equal(left, right), [&] {
          return json{{"a", grid[i]}, {"b", grid[j]}, {"c", grid[k]},
                      {"a*(b*c)", left}, {"(a*b)*c", right}};
        });
        // (t ∨ s) ∗ l = (t ∗ l) ∨ (s ∗ l)
        double lhs = at(std::max(i, j), k);
        double rhs = std::max(at(i, k), at(j, k));
        distrib.record(approx_equal(lhs, rhs), [&] {
          return json{{"t", grid[i]}, {"s", grid[j]}, {"l", grid[k]},
                      {"(t v s)*l", lhs}, {"(t*l) v (s*l)", rhs}};
        });
      }
    }
  }
  report.checks.push_back(assoc.finish());
  report.checks.push_back(distrib.finish());

  CheckBuilder mono("monotonicity");
  double modulus = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i + 1 < m) {
        mono.record(at(i, j) <= at(i + 1, j) + kTolerance, [&] {
          return json{{"a", grid[i]}, {"a'", grid[i + 1]}, {"b", grid[j]},
                      {"a*b", at(i, j)}, {"a'*b", at(i + 1, j)}};
        });
        modulus = std::max(modulus, std::abs(at(i + 1, j) - at(i, j)));
      }
      if (j + 1 < m) {
        mono.record(at(i, j) <= at(i, j + 1) + kTolerance, [&] {
          return json{{"a", grid[i]}, {"b", grid[j]}, {"b'", grid[j + 1]},
                      {"a*b", at(i, j)}, {"a*b'", at(i, j + 1)}};
        });
        modulus = std::max(modulus, std::abs(at(i, j + 1) - at(i, j)));
      }
    }
  }
  report.checks.push_back(mono.finish());

  Check cont;
  cont.name = "continuity-modulus-estimate";
  cont.samples = 2 * m * (m - 1);
  const double step = 1.0 / denominator;
  cont.verdict = modulus <= 2.0 * step + kTolerance ? Verdict::pass : Verdict::fail;
  cont.failures = cont.verdict == Verdict::fail ? 1 : 0;
  cont.detail = json{{"modulus", modulus}, {"grid_step", step}, {"bound", 2.0 * step}};
  report.checks.push_back(std::move(cont));
  return report;
}

}  // namespace tnint
