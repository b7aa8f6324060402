/**
 * @brief The `tnint` command line: JSON in, JSON report on stdout, a one-line
 * summary on stderr.
 *
 * Exit codes: 0 all requested checks passed (or a value was computed),
 * 1 a verified property failed, 2 bad input or usage.
 */
#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <tnint/io.hpp>
#include <tnint/tnint.hpp>

namespace tnint::cli {

enum Exit : int { kOk = 0, kPropertyFailed = 1, kInputError = 2 };

namespace detail {

struct Common {
  std::uint64_t seed = 0;
  int grid = 20;
  std::size_t samples = 500;
  double tolerance = kTolerance;

  SamplingOptions sampling() const {
    SamplingOptions o;
    o.seed = seed;
    o.grid = grid;
    o.samples = samples;
    o.tolerance = tolerance;
    return o;
  }
};

inline void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--grid", c.grid, "value grid denominator N, grid {0, 1/N, ..., 1}")
      ->capture_default_str()
      ->check(CLI::Range(1, 100000));
  cmd->add_option("--samples", c.samples, "random samples per check")->capture_default_str();
  cmd->add_option("--tolerance", c.tolerance, "absolute equality tolerance")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
}

inline std::string verdict_line(const Report& r) {
  std::size_t pass = 0, fail = 0, open = 0;
  for (const auto& c : r.checks) {
    if (c.verdict == Verdict::pass) ++pass;
    else if (c.verdict == Verdict::fail) ++fail;
    else ++open;
  }
  std::ostringstream s;
  s << r.subject << ": " << pass << " pass, " << fail << " fail, " << open << " inconclusive";
  return s.str();
}

inline std::string number(double v) {
  std::ostringstream s;
  s << std::setprecision(15) << v;
  return s.str();
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::Common;
  CLI::App app{"Capacities, t-normed integrals and axiom checks on finite spaces", "tnint"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expand help for every subcommand");

  Common common;
  std::string capacity_arg, function_arg, tnorm_name = "minimum";
  std::string psi_arg, phi_arg, subspace_arg, axioms_arg;
  double delta = 0, xi = 0, c_level = 0, d_level = 0;
  bool with_oracle = false, counterexample_flag = false, sugeno = false, literal = false;
  double oracle_step = 1e-3;
  std::size_t n_points = 3;
  int sweep_grid = 60;

  // Filled by the selected handler.
  json result;
  std::string summary;
  int code = kOk;

  auto* integrate = app.add_subcommand("integrate", "integrate a function w.r.t. a capacity");
  integrate->add_option("--capacity", capacity_arg, "capacity JSON file or inline JSON")->required();
  integrate->add_option("--function", function_arg, "function JSON file or inline JSON")->required();
  integrate->add_option("--tnorm", tnorm_name, "minimum | product | lukasiewicz")->capture_default_str();
  integrate->add_flag("--oracle", with_oracle, "also compute the grid-sweep value");
  integrate->add_option("--oracle-step", oracle_step, "grid step of the sweep")->capture_default_str();

  auto* verify_capacity = app.add_subcommand("verify-capacity", "check boundary and monotonicity");
  verify_capacity->add_option("--capacity", capacity_arg, "capacity JSON")->required();
  detail::add_common(verify_capacity, common);

  auto* verify_tnorm = app.add_subcommand("verify-tnorm", "check the t-norm axioms on a grid");
  verify_tnorm->add_option("--tnorm", tnorm_name, "t-norm name")->capture_default_str();
  detail::add_common(verify_tnorm, common);

  auto* axioms = app.add_subcommand("axioms", "sample axioms of an integral functional");
  axioms->add_option("--capacity", capacity_arg, "capacity JSON");
  axioms->add_option("--tnorm", tnorm_name, "t-norm of the integral")->capture_default_str();
  axioms->add_flag("--counterexample", counterexample_flag, "use the built-in three-point functional");
  axioms->add_option("--axioms", axioms_arg,
                     "comma-separated list, e.g. normed,comonotone_maxitive,star_homogeneous(product)");
  detail::add_common(axioms, common);

  auto* chain = app.add_subcommand("chain", "monotone comonotone chain between psi <= phi");
  chain->add_option("--psi", psi_arg, "lower function JSON")->required();
  chain->add_option("--phi", phi_arg, "upper function JSON")->required();
  chain->add_option("--capacity", capacity_arg, "optional: also integrate along the chain");
  chain->add_option("--tnorm", tnorm_name, "t-norm for --capacity")->capture_default_str();

  auto* raise = app.add_subcommand("level-raise", "raise phi to 1 above xi, keep it below delta");
  raise->add_option("--phi", phi_arg, "function JSON")->required();
  raise->add_option("--delta", delta, "lower level")->required();
  raise->add_option("--xi", xi, "upper level")->required();

  auto* witness = app.add_subcommand("witness", "squeeze witness for psi <= phi and c < d");
  witness->add_option("--phi", phi_arg, "upper function JSON")->required();
  witness->add_option("--psi", psi_arg, "lower function JSON")->required();
  witness->add_option("-c,--c", c_level, "lower constant")->required();
  witness->add_option("-d,--d", d_level, "upper constant")->required();

  auto* roundtrip = app.add_subcommand("roundtrip", "enumerate capacities and round-trip each");
  roundtrip->add_option("--n", n_points, "point count (1..4)")->capture_default_str();
  roundtrip->add_option("--tnorm", tnorm_name, "t-norm name")->capture_default_str();
  roundtrip->add_flag("--sugeno", sugeno, "check only vee/wedge homogeneity (minimum t-norm)");
  detail::add_common(roundtrip, common);

  auto* counterexample = app.add_subcommand("counterexample", "verify the three-point functional");
  counterexample->add_option("--grid", sweep_grid, "sweep grid denominator")
      ->capture_default_str()
      ->check(CLI::Range(1, 1000));
  counterexample->add_flag("--literal", literal, "only check the literal-value variant");

  auto* extend = app.add_subcommand("extend", "extend a subspace functional to one more function");
  extend->add_option("--subspace", subspace_arg, "subspace JSON")->required();
  extend->add_option("--function", function_arg, "function JSON")->required();
  extend->add_option("--grid", sweep_grid, "infimum grid denominator")
      ->capture_default_str()
      ->check(CLI::Range(1, 1000));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    std::string what = e.what();
    what.erase(std::remove(what.begin(), what.end(), '\n'), what.end());
    err << "error: " << what << "\n";
    return kInputError;
  }
  auto report_out = [&](const Report& r) {
    result = to_json(r);
    summary = detail::verdict_line(r);
    return r.passed() ? kOk : kPropertyFailed;
  };

  try {
    const SamplingOptions opts = common.sampling();
    if (integrate->parsed()) {
      const Capacity nu = io::capacity_from_json(io::load(capacity_arg, "capacity"));
      const FnVec f = io::fnvec_from_json(io::load(function_arg, "function"));
      const TNorm op = TNorm::by_name(tnorm_name);
      const Report valid = validate(nu);
      if (!valid.passed()) {
        code = report_out(valid);
      } else {
        const double v = tnormed_integral(nu, f, op);
        result = json{{"tnorm", op.name()}, {"value", v}};
        summary = "integral = " + detail::number(v);
        if (with_oracle) {
          const double o = tnormed_integral_grid(nu, f, op, oracle_step);
          result["oracle"] = o;
          result["oracle_step"] = oracle_step;
          summary += ", oracle = " + detail::number(o);
        }
      }
    } else if (verify_capacity->parsed()) {
      code = report_out(validate(io::capacity_from_json(io::load(capacity_arg, "capacity")),
                                 common.tolerance));
    } else if (verify_tnorm->parsed()) {
      if (common.grid < 9) throw InputError("verify-tnorm needs --grid >= 9");
      code = report_out(check_tnorm_axioms(TNorm::by_name(tnorm_name), common.grid));
    } else if (axioms->parsed()) {
      const TNorm op = TNorm::by_name(tnorm_name);
      std::vector<AxiomKind> kinds;
      std::stringstream list(axioms_arg);
      for (std::string item; std::getline(list, item, ',');)
        if (!item.empty()) kinds.push_back(AxiomKind::parse(item, op));
      if (counterexample_flag == !capacity_arg.empty()) {
        throw InputError("axioms needs exactly one of --capacity or --counterexample");
      }
      if (counterexample_flag) {
        if (kinds.empty()) {
          kinds = {AxiomKind::monotone(), AxiomKind::vee_homogeneous(),
                   AxiomKind::star_homogeneous(TNorm::product()), AxiomKind::comonotone_maxitive()};
        }
        auto [s, fn] = counterexample_functional();
        SamplingOptions o = opts;
        o.pool = subspace_pool(s, 6);
        code = report_out(check_axioms(fn, kinds, o));
      } else {
        if (kinds.empty()) {
          kinds = {AxiomKind::normed(), AxiomKind::comonotone_maxitive(), AxiomKind::star_homogeneous(op)};
        }
        const Capacity nu = io::capacity_from_json(io::load(capacity_arg, "capacity"));
        code = report_out(check_axioms(integral_functional(nu, op), kinds, opts));
      }
    } else if (chain->parsed()) {
      const FnVec psi = io::fnvec_from_json(io::load(psi_arg, "psi"));
      const FnVec phi = io::fnvec_from_json(io::load(phi_arg, "phi"));
      const auto links = monotone_chain(psi, phi);
      json arr = json::array();
      for (const auto& f : links) arr.push_back(to_json(f));
      result = json{{"chain", arr}};
      summary = "chain of " + std::to_string(links.size()) + " functions";
      if (!capacity_arg.empty()) {
        const Capacity nu = io::capacity_from_json(io::load(capacity_arg, "capacity"));
        const TNorm op = TNorm::by_name(tnorm_name);
        json values = json::array();
        values.push_back(tnormed_integral(nu, psi, op));
        for (const auto& f : links) values.push_back(tnormed_integral(nu, f, op));
        values.push_back(tnormed_integral(nu, phi, op));
        result["integrals"] = values;
      }
    } else if (raise->parsed()) {
      const FnVec phi = io::fnvec_from_json(io::load(phi_arg, "phi"));
      const FnVec psi = level_raise(phi, delta, xi);
      result = json{{"psi", to_json(psi)}, {"comonotone", is_comonotone(phi, psi)}};
      summary = "level-raise at delta=" + detail::number(delta) + ", xi=" + detail::number(xi);
    } else if (witness->parsed()) {
      const FnVec phi = io::fnvec_from_json(io::load(phi_arg, "phi"));
      const FnVec psi = io::fnvec_from_json(io::load(psi_arg, "psi"));
      const FnVec x = squeeze_witness(phi, psi, c_level, d_level);
      const bool wedge = meet(c_level, x) == meet(c_level, phi);
      const bool vee = join(d_level, x) == join(d_level, psi);
      result = json{{"xi", to_json(x)}, {"wedge_identity", wedge}, {"vee_identity", vee}};
      summary = std::string("squeeze witness, identities ") + (wedge && vee ? "hold" : "FAIL");
      code = wedge && vee ? kOk : kPropertyFailed;
    } else if (roundtrip->parsed()) {
      if (n_points < 1 || n_points > kMaxEnumerationPoints) {
        throw InputError("roundtrip --n must be in 1.." + std::to_string(kMaxEnumerationPoints));
      }
      const TNorm op = sugeno ? TNorm::minimum() : TNorm::by_name(tnorm_name);
      std::size_t total = 0, passed = 0;
      json failures = json::array();
      for_each_capacity(n_points, uniform_grid(common.grid), [&](const Capacity& nu) {
        ++total;
        const Report r = sugeno ? verify_sugeno_simplification(nu, opts)
                                : verify_characterization(nu, op, opts);
        if (r.passed()) ++passed;
        else if (failures.size() < 5) failures.push_back(to_json(r));
      });
      result = json{{"n", n_points},   {"grid_step", 1.0 / common.grid},
                    {"tnorm", op.name()}, {"mode", sugeno ? "sugeno" : "characterization"},
                    {"capacities", total}, {"passed", passed},
                    {"failed", total - passed}, {"first_failures", failures}};
      summary = "round trip " + op.name() + ": " + std::to_string(passed) + "/" +
                std::to_string(total) + " capacities pass";
      code = passed == total ? kOk : kPropertyFailed;
    } else if (counterexample->parsed()) {
      if (literal) {
        code = report_out(well_definedness_check(counterexample_subspace(true), sweep_grid));
      } else {
        const CounterexampleReport r = verify_counterexample(sweep_grid);
        result = to_json(r.report);
        result["values"] = json{{"mu(phi1)", r.mu_phi1}, {"mu(phi2)", r.mu_phi2},
                                {"mu(phi1 v phi2)", r.mu_join}};
        result["expected_outcomes"] = r.expected_outcomes;
        result["summary"] = r.summary;
        summary = r.summary;
        code = r.expected_outcomes ? kOk : kPropertyFailed;
      }
    } else if (extend->parsed()) {
      const GenSubspace s = io::subspace_from_json(io::load(subspace_arg, "subspace"));
      const FnVec phi = io::fnvec_from_json(io::load(function_arg, "function"));
      const ExtensionResult e = extend_one_step(s, phi, sweep_grid);
      result = json{{"a", e.a},
                    {"a_coarse", e.a_coarse},
                    {"extended", e.extended},
                    {"refinement_agrees", e.refinement_agrees},
                    {"subspace", io::subspace_to_json(e.subspace)}};
      summary = "a = " + detail::number(e.a) + (e.extended ? "" : " (already in the subspace)");
      code = e.refinement_agrees ? kOk : kPropertyFailed;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  out << result.dump(2) << "\n";
  err << summary << "\n";
  return code;
}

}  // namespace tnint::cli
