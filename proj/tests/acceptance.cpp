// Acceptance gate: ten criteria, one PASS/FAIL line each, with wall-clock
// limits. Exit status is nonzero if any criterion fails or runs over time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <tnint/tnint.hpp>

using namespace tnint;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Collects the first few reasons for failure alongside a summary.
class Tally {
 public:
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_++ < 3) reasons_ << (reasons_.tellp() > 0 ? "; " : "") << what;
  }
  Outcome done(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    std::ostringstream s;
    s << summary << " | " << failures_ << " failure(s): " << reasons_.str();
    return {false, s.str()};
  }

 private:
  std::size_t failures_ = 0;
  std::ostringstream reasons_;
};

std::string str(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

FnVec random_vector(Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.unit();
  return FnVec(std::move(v));
}

TNorm random_op(Rng& rng) { return builtin_tnorms()[rng.index(3)]; }

// 1. Exact values of the three-point functional.
Outcome counterexample_values() {
  Tally t;
  auto [s, fn] = counterexample_functional();
  const FnVec phi1{0.0, 0.5, 2.0 / 3.0};
  const FnVec phi2{1.0 / 3.0, 1.0 / 3.0, 1.0};
  const double m1 = fn(phi1), m2 = fn(phi2), mj = fn(join(phi1, phi2));
  t.require(std::abs(m1 - 1.0 / 3.0) <= 1e-12, "mu(phi1)=" + str(m1));
  t.require(std::abs(m2 - 1.0 / 3.0) <= 1e-12, "mu(phi2)=" + str(m2));
  t.require(std::abs(mj - 0.5) <= 1e-12, "mu(phi1 v phi2)=" + str(mj));
  t.require(is_comonotone(phi1, phi2), "phi1, phi2 not comonotone");
  t.require(std::abs(mj - std::max(m1, m2)) > 0.1, "maxitivity did not fail");
  return t.done("mu(phi1)=" + str(m1) + " mu(phi2)=" + str(m2) + " mu(phi1 v phi2)=" + str(mj));
}

// 2. Exhaustive sweep over the 1/60 grid elements of H.
Outcome counterexample_sweep() {
  Tally t;
  const Report r = subspace_axiom_sweep(counterexample_subspace(), 60, 1e-9);
  std::ostringstream s;
  for (const auto& c : r.checks) {
    s << c.name << " " << to_string(c.verdict) << " (" << c.samples << " samples, " << c.failures
      << " violations) ";
    t.require(c.verdict == Verdict::pass && c.failures == 0, c.name + " " + to_string(c.verdict));
  }
  const Report wd = well_definedness_check(counterexample_subspace(), 60, 1e-9);
  t.require(wd.passed(), "well_defined failed");
  s << "well_defined " << to_string(wd.checks[0].verdict) << " over "
    << wd.checks[0].detail["elements"].get<std::size_t>() << " elements";
  return t.done(s.str());
}

// 3. The literal generator values collide.
Outcome literal_collision() {
  Tally t;
  const GenSubspace literal = counterexample_subspace(true);
  const Report r = well_definedness_check(literal, 60);
  const Check& c = r.checks[0];
  t.require(c.verdict == Verdict::fail, "well_defined did not fail");
  t.require(literal.generators()[2] == literal.generators()[1], "phi3 != phi2");
  if (c.verdict == Verdict::fail) {
    const double lo = std::min(c.witness["first_value"].get<double>(), c.witness["second_value"].get<double>());
    const double hi = std::max(c.witness["first_value"].get<double>(), c.witness["second_value"].get<double>());
    t.require(std::abs(lo - 1.0 / 3.0) <= 1e-12 && std::abs(hi - 0.5) <= 1e-12,
              "collision values " + str(lo) + " vs " + str(hi));
    t.require(FnVec(c.witness["function"].get<std::vector<double>>()) == literal.generators()[1],
              "collision is not at phi2");
    return t.done("collision at phi3 = phi2, values " + str(hi) + " vs " + str(lo) + ", " +
                  std::to_string(c.failures) + " colliding elements");
  }
  return t.done("no collision");
}

// 4. Characterization round trip over every enumerated capacity.
Outcome characterization_round_trip() {
  Tally t;
  SamplingOptions opts;
  opts.samples = 500;
  std::size_t capacities = 0, runs = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for_each_capacity(n, uniform_grid(4), [&](const Capacity& nu) {
      ++capacities;
      for (const TNorm& op : builtin_tnorms()) {
        ++runs;
        opts.seed = runs;
        const Report r = verify_characterization(nu, op, opts);
        for (const auto& c : r.checks) {
          t.require(c.verdict == Verdict::pass,
                    "n=" + std::to_string(n) + " " + op.name() + " " + c.name + " " + to_string(c.verdict));
        }
      }
    });
  }
  return t.done(std::to_string(capacities) + " capacities x 3 t-norms, " + std::to_string(runs) +
                " round trips");
}

// 5. Sugeno two-homogeneity round trip, and a product-integral ∧-homogeneity violation.
Outcome sugeno_simplification() {
  Tally t;
  SamplingOptions opts;
  opts.samples = 500;
  std::size_t capacities = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for_each_capacity(n, uniform_grid(4), [&](const Capacity& nu) {
      opts.seed = ++capacities;
      const Report r = verify_sugeno_simplification(nu, opts);
      for (const auto& c : r.checks)
        t.require(c.verdict == Verdict::pass, "n=" + std::to_string(n) + " " + c.name);
    });
  }
  json witness;
  for (std::size_t n = 1; n <= 3 && witness.is_null(); ++n) {
    for_each_capacity(n, uniform_grid(4), [&](const Capacity& nu) {
      if (!witness.is_null()) return;
      const Report r = check_axioms(integral_functional(nu, TNorm::product()),
                                    {AxiomKind::wedge_homogeneous()}, opts);
      if (r.checks[0].verdict == Verdict::fail) witness = r.checks[0].witness;
    });
  }
  t.require(!witness.is_null(), "no product wedge-homogeneity violation found");
  return t.done(std::to_string(capacities) + " capacities pass; product violates wedge homogeneity at " +
                witness.dump());
}

// 6. Exact integral against the 1e-3 level sweep.
Outcome exact_vs_oracle() {
  Tally t;
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    Rng rng(derive_seed(6, 0, i));
    const std::size_t n = 1 + rng.index(5);
    const Capacity nu = random_capacity(n, uniform_grid(100), derive_seed(6, 1, i));
    const FnVec f = random_vector(rng, n);
    const TNorm op = random_op(rng);
    const double exact = tnormed_integral(nu, f, op);
    const double oracle = tnormed_integral_grid(nu, f, op, 1e-3);
    worst = std::max(worst, exact - oracle);
    t.require(oracle <= exact && exact <= oracle + 1e-3,
              "sample " + std::to_string(i) + " exact=" + str(exact) + " oracle=" + str(oracle));
  }
  return t.done("10000 triples, max(exact - oracle) = " + str(worst));
}

// 7. Comonotone chains and integrals along them.
Outcome chain_suite() {
  Tally t;
  struct Pair {
    FnVec psi, phi;
    std::vector<FnVec> chain;
  };
  std::vector<Pair> pairs;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng(derive_seed(7, 0, i));
    const std::size_t n = 2 + rng.index(5);
    const FnVec phi = random_vector(rng, n);
    const FnVec psi = meet(phi, random_vector(rng, n));
    auto chain = monotone_chain(psi, phi);
    t.require(chain.size() == n - 1, "chain length");
    std::vector<FnVec> full{psi};
    full.insert(full.end(), chain.begin(), chain.end());
    full.push_back(phi);
    for (std::size_t k = 0; k + 1 < full.size(); ++k) {
      t.require(pointwise_leq(full[k], full[k + 1]), "sandwich broken at pair " + std::to_string(i));
      t.require(is_comonotone(full[k], full[k + 1]), "not comonotone at pair " + std::to_string(i));
    }
    pairs.push_back({psi, phi, std::move(full)});
  }
  std::size_t evaluations = 0;
  for (std::uint64_t k = 0; k < 100; ++k) {
    Rng rng(derive_seed(7, 1, k));
    const std::size_t n = 2 + rng.index(5);
    const Functional fn = integral_functional(random_capacity(n, uniform_grid(20), derive_seed(7, 2, k)),
                                              random_op(rng));
    for (const auto& p : pairs) {
      if (p.phi.size() != n) continue;
      for (std::size_t j = 0; j + 1 < p.chain.size(); ++j) {
        ++evaluations;
        t.require(fn(p.chain[j]) <= fn(p.chain[j + 1]), "integral decreases along a chain");
      }
    }
  }
  return t.done("1000 chains; 100 functionals, " + std::to_string(evaluations) + " chain steps nondecreasing");
}

// 8. Level-raise properties and the worked value 13/18.
Outcome level_raise_suite() {
  Tally t;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng(derive_seed(8, 0, i));
    const std::size_t n = 1 + rng.index(6);
    const FnVec phi = random_vector(rng, n);
    double xi = rng.unit();
    while (xi <= 0.0 || xi >= 1.0) xi = rng.unit();
    const double delta = xi * rng.unit() * (1.0 - 1e-12);
    const FnVec psi = level_raise(phi, delta, xi);
    t.require(in_upsilon(psi, upper_level_set(phi, xi)), "psi != 1 on the xi level set");
    for (std::size_t x = 0; x < n; ++x)
      if (phi[x] <= delta) t.require(psi[x] == phi[x], "psi != phi below delta");
    t.require(is_comonotone(phi, psi), "not comonotone");
    t.require(pointwise_leq(phi, psi), "psi < phi");
  }
  const FnVec psi = level_raise(FnVec{0.2, 0.5, 0.9}, 0.3, 0.6);
  t.require(psi[0] == 0.2 && std::abs(psi[1] - 13.0 / 18.0) <= 1e-12 && psi[2] == 1.0,
            "worked example gave (" + str(psi[0]) + ", " + str(psi[1]) + ", " + str(psi[2]) + ")");
  return t.done("1000 samples; (0.2, 0.5, 0.9) at delta=0.3, xi=0.6 gives psi(x2)=" + str(psi[1]));
}

// 9. Squeeze identities, exact.
Outcome squeeze_suite() {
  Tally t;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng(derive_seed(9, 0, i));
    const std::size_t n = 1 + rng.index(6);
    const FnVec phi = random_vector(rng, n);
    const FnVec psi = meet(phi, random_vector(rng, n));
    double c = rng.unit(), d = rng.unit();
    if (c > d) std::swap(c, d);
    if (c == d) continue;
    const FnVec xi = squeeze_witness(phi, psi, c, d);
    t.require(meet(c, xi) == meet(c, phi), "wedge identity at sample " + std::to_string(i));
    t.require(join(d, xi) == join(d, psi), "vee identity at sample " + std::to_string(i));
  }
  return t.done("1000 samples, both identities exact");
}

// 10. One-step extension.
Outcome extension_suite() {
  Tally t;
  const double step = 1.0 / 60.0;
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng(derive_seed(10, 0, i));
    const std::size_t n = 1 + rng.index(5);
    const FnVec phi = random_vector(rng, n);
    const ExtensionResult e = extend_one_step(GenSubspace::constants_only(n), phi, 60);
    worst = std::max(worst, std::abs(e.a - phi.max()));
    t.require(std::abs(e.a - phi.max()) <= step, "a=" + str(e.a) + " max=" + str(phi.max()));
  }
  const GenSubspace h = counterexample_subspace();
  const FnVec fresh{0.2, 0.9, 0.5};
  const ExtensionResult e = extend_one_step(h, fresh, 60);
  t.require(e.extended, "fresh function already in H");
  const Report wd = well_definedness_check(e.subspace, 60, 2 * step);
  t.require(wd.passed(), "extended H not well defined: " + to_json(wd).dump());
  const Report sweep = subspace_axiom_sweep(e.subspace, 60, 2 * step);
  const Check* mono = sweep.find("monotone");
  t.require(mono->verdict == Verdict::pass, "extended H not monotone: " + mono->witness.dump());
  return t.done("constants-only: max |a - max phi| = " + str(worst) + "; H + (0.2, 0.9, 0.5): a = " +
                str(e.a) + ", well defined and monotone on " + std::to_string(mono->samples) +
                " comparable pairs");
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"counterexample exact values", 1, counterexample_values},
      {"counterexample axiom sweep at 1/60", 60, counterexample_sweep},
      {"literal values are ill defined", 10, literal_collision},
      {"characterization round trip", 300, characterization_round_trip},
      {"Sugeno two-homogeneity round trip", 120, sugeno_simplification},
      {"exact integral vs level sweep oracle", 30, exact_vs_oracle},
      {"comonotone chain suite", 30, chain_suite},
      {"level-raise suite", 10, level_raise_suite},
      {"squeeze witness suite", 10, squeeze_suite},
      {"one-step extension", 120, extension_suite},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool ok = o.pass && in_time;
    failed += !ok;
    std::printf("[%s] %2d %s (%.2f s, limit %.0f s)%s: %s\n", ok ? "PASS" : "FAIL", index, c.name, secs,
                c.limit_seconds, in_time ? "" : " OVER TIME", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
