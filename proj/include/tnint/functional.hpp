/**
 * @brief Sampled verification of functional axioms: normedness,
 * monotonicity, comonotone maxitivity, and homogeneity with respect to a
 * t-norm, max, min or (for characteristic functions only) a t-norm.
 *
 * Verdicts are corroboration or refutation on samples, never proofs.
 */
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "comonotone.hpp"
#include "integral.hpp"
#include "random.hpp"
#include "report.hpp"
#include "tnorm.hpp"

namespace tnint {

struct AxiomKind {
  enum class Tag {
    normed,
    monotone,
    comonotone_maxitive,
    star_homogeneous,
    vee_homogeneous,
    wedge_homogeneous,
    star_char_homogeneous,
  };

  Tag tag;
  std::optional<TNorm> op;  // set for the star variants

  static AxiomKind normed() { return {Tag::normed, std::nullopt}; }
  static AxiomKind monotone() { return {Tag::monotone, std::nullopt}; }
  static AxiomKind comonotone_maxitive() { return {Tag::comonotone_maxitive, std::nullopt}; }
  static AxiomKind vee_homogeneous() { return {Tag::vee_homogeneous, std::nullopt}; }
  static AxiomKind wedge_homogeneous() { return {Tag::wedge_homogeneous, std::nullopt}; }
  static AxiomKind star_homogeneous(TNorm op) { return {Tag::star_homogeneous, std::move(op)}; }
  static AxiomKind star_char_homogeneous(TNorm op) {
    return {Tag::star_char_homogeneous, std::move(op)};
  }

  std::string name() const {
    switch (tag) {
      case Tag::normed: return "normed";
      case Tag::monotone: return "monotone";
      case Tag::comonotone_maxitive: return "comonotone_maxitive";
      case Tag::star_homogeneous: return "star_homogeneous(" + op->name() + ")";
      case Tag::vee_homogeneous: return "vee_homogeneous";
      case Tag::wedge_homogeneous: return "wedge_homogeneous";
      case Tag::star_char_homogeneous: return "star_char_homogeneous(" + op->name() + ")";
    }
    return "?";
  }

  /// Parses the names produced by name(), plus "star_homogeneous" and
  /// "star_char_homogeneous" without a parenthesized t-norm (then `default_op`).
  static AxiomKind parse(std::string_view text, const TNorm& default_op) {
    auto with_op = [&](std::string_view prefix) -> std::optional<TNorm> {
      if (text == prefix) return default_op;
      if (text.size() > prefix.size() + 2 && text.substr(0, prefix.size()) == prefix &&
          text[prefix.size()] == '(' && text.back() == ')') {
        return TNorm::by_name(text.substr(prefix.size() + 1, text.size() - prefix.size() - 2));
      }
      return std::nullopt;
    };
    if (text == "normed") return normed();
    if (text == "monotone") return monotone();
    if (text == "comonotone_maxitive") return comonotone_maxitive();
    if (text == "vee_homogeneous") return vee_homogeneous();
    if (text == "wedge_homogeneous") return wedge_homogeneous();
    if (auto op = with_op("star_char_homogeneous")) return star_char_homogeneous(*op);
    if (auto op = with_op("star_homogeneous")) return star_homogeneous(*op);
    throw InputError("unknown axiom '" + std::string(text) + "'");
  }
};

struct SamplingOptions {
  int grid = 20;               // value grid {0, 1/grid, ..., 1}
  std::size_t samples = 500;   // random draws per axiom
  std::uint64_t seed = 0;
  double tolerance = kTolerance;
  // Deterministic candidates tried before the random draws (at most
  // `samples` of them per axiom). Useful for partial-domain functionals
  // that random grid vectors almost never hit.
  std::vector<FnVec> pool;
};

inline json to_json(const FnVec& f) {
  json j = json::array();
  for (double v : f) j.push_back(v);
  return j;
}

namespace detail {

/// Calls `visit(i, j)` for ordered pool pairs i != j, stopping after `limit`.
template <typename Visit>
void for_pool_pairs(std::size_t size, std::size_t limit, Visit visit) {
  std::size_t used = 0;
  for (std::size_t i = 0; i < size && used < limit; ++i)
    for (std::size_t j = 0; j < size && used < limit; ++j)
      if (i != j && visit(i, j)) ++used;
}

class AxiomSampler {
 public:
  AxiomSampler(const Functional& fn, const SamplingOptions& opts)
      : fn_(fn), opts_(opts), grid_(uniform_grid(opts.grid)) {}

  Check run(const AxiomKind& axiom) {
    CheckBuilder b(axiom.name());
    const auto stream = static_cast<std::uint64_t>(axiom.tag) + 1;
    switch (axiom.tag) {
      case AxiomKind::Tag::normed: normed(b); break;
      case AxiomKind::Tag::monotone: monotone(b, stream); break;
      case AxiomKind::Tag::comonotone_maxitive: maxitive(b, stream); break;
      case AxiomKind::Tag::star_homogeneous:
        homogeneous(b, stream, [&](double c, const FnVec& f) { return star(*axiom.op, c, f); },
                    [&](double c, double v) { return axiom.op->apply(c, v); });
        break;
      case AxiomKind::Tag::vee_homogeneous:
        homogeneous(b, stream, [](double c, const FnVec& f) { return join(c, f); },
                    [](double c, double v) { return std::max(c, v); });
        break;
      case AxiomKind::Tag::wedge_homogeneous:
        homogeneous(b, stream, [](double c, const FnVec& f) { return meet(c, f); },
                    [](double c, double v) { return std::min(c, v); });
        break;
      case AxiomKind::Tag::star_char_homogeneous: char_homogeneous(b, *axiom.op); break;
    }
    return b.finish();
  }

 private:
  bool ok(const FnVec& f) const { return fn_.in_domain(f); }
  bool eq(double a, double b) const { return approx_equal(a, b, opts_.tolerance); }
  Rng rng(std::uint64_t stream, std::uint64_t i) const {
    return Rng(derive_seed(opts_.seed, stream, i));
  }

  void normed(CheckBuilder& b) {
    const FnVec one = FnVec::constant(fn_.n, 1.0);
    if (!ok(one)) return;
    const double v = fn_(one);
    b.record(eq(v, 1.0), [&] { return json{{"f", to_json(one)}, {"I(f)", v}, {"expected", 1.0}}; });
  }

  void monotone_pair(CheckBuilder& b, const FnVec& f, const FnVec& g) {
    if (!ok(f) || !ok(g)) return;
    const double vf = fn_(f), vg = fn_(g);
    b.record(vf <= vg + opts_.tolerance, [&] {
      return json{{"f", to_json(f)}, {"g", to_json(g)}, {"I(f)", vf}, {"I(g)", vg},
                  {"relation", "f <= g but I(f) > I(g)"}};
    });
  }

  void monotone(CheckBuilder& b, std::uint64_t stream) {
    const auto& pool = opts_.pool;
    for_pool_pairs(pool.size(), opts_.samples, [&](std::size_t i, std::size_t j) {
      if (!pointwise_leq(pool[i], pool[j])) return false;
      monotone_pair(b, pool[i], pool[j]);
      return true;
    });
    for (std::size_t s = 0; s < opts_.samples; ++s) {
      Rng r = rng(stream, s);
      FnVec g = r.grid_vector(fn_.n, grid_);
      FnVec f = meet(g, r.grid_vector(fn_.n, grid_));
      monotone_pair(b, f, g);
    }
  }

  void maxitive_pair(CheckBuilder& b, const FnVec& f, const FnVec& g) {
    const FnVec h = join(f, g);
    if (!ok(f) || !ok(g) || !ok(h)) return;
    const double vf = fn_(f), vg = fn_(g), vh = fn_(h);
    b.record(eq(vh, std::max(vf, vg)), [&] {
      return json{{"f", to_json(f)}, {"g", to_json(g)}, {"f v g", to_json(h)},
                  {"I(f)", vf}, {"I(g)", vg}, {"I(f) v I(g)", std::max(vf, vg)},
                  {"I(f v g)", vh}};
    });
  }

  void maxitive(CheckBuilder& b, std::uint64_t stream) {
    const auto& pool = opts_.pool;
    for_pool_pairs(pool.size(), opts_.samples, [&](std::size_t i, std::size_t j) {
      if (i > j || !is_comonotone(pool[i], pool[j])) return false;
      maxitive_pair(b, pool[i], pool[j]);
      return true;
    });
    for (std::size_t s = 0; s < opts_.samples; ++s) {
      auto [f, g] = random_comonotone_pair(fn_.n, grid_, derive_seed(opts_.seed, stream, s));
      maxitive_pair(b, f, g);
    }
  }

  template <typename Lift, typename Combine>
  void homogeneous_one(CheckBuilder& b, double c, const FnVec& f, Lift lift, Combine combine) {
    const FnVec cf = lift(c, f);
    if (!ok(f) || !ok(cf)) return;
    const double lhs = fn_(cf), vf = fn_(f), rhs = combine(c, vf);
    b.record(eq(lhs, rhs), [&] {
      return json{{"c", c}, {"f", to_json(f)}, {"c op f", to_json(cf)},
                  {"I(c op f)", lhs}, {"I(f)", vf}, {"c op I(f)", rhs}};
    });
  }

  template <typename Lift, typename Combine>
  void homogeneous(CheckBuilder& b, std::uint64_t stream, Lift lift, Combine combine) {
    std::size_t used = 0;
    for (const FnVec& f : opts_.pool) {
      for (double c : grid_) {
        if (used++ >= opts_.samples) break;
        homogeneous_one(b, c, f, lift, combine);
      }
    }
    for (std::size_t s = 0; s < opts_.samples; ++s) {
      Rng r = rng(stream, s);
      const double c = r.pick(grid_);
      homogeneous_one(b, c, r.grid_vector(fn_.n, grid_), lift, combine);
    }
  }

  void char_homogeneous(CheckBuilder& b, const TNorm& op) {
    const std::uint32_t count = std::uint32_t{1} << fn_.n;
    for (std::uint32_t bits = 0; bits < count; ++bits) {
      const FnVec chi = characteristic(Subset(bits), fn_.n);
      for (double c : grid_) {
        homogeneous_one(b, c, chi, [&](double k, const FnVec& f) { return star(op, k, f); },
                        [&](double k, double v) { return op.apply(k, v); });
      }
    }
  }

  const Functional& fn_;
  const SamplingOptions& opts_;
  ValueGrid grid_;
};

}  // namespace detail

/**
 * Checks each requested axiom on samples drawn from the value grid (and on
 * `opts.pool`, if given). A sample is used only if every function it needs
 * lies in the functional's domain; an axiom with no usable sample is
 * reported inconclusive.
 */
inline Report check_axioms(const Functional& fn, std::span<const AxiomKind> axioms,
                           const SamplingOptions& opts = {}) {
  if (fn.n < 1) throw InputError("functional must have at least one point");
  Report report;
  report.subject = fn.label;
  detail::AxiomSampler sampler(fn, opts);
  for (const auto& axiom : axioms) report.checks.push_back(sampler.run(axiom));
  return report;
}

inline Report check_axioms(const Functional& fn, std::initializer_list<AxiomKind> axioms,
                           const SamplingOptions& opts = {}) {
  return check_axioms(fn, std::span<const AxiomKind>(axioms.begin(), axioms.size()), opts);
}

/// The squeeze construction applied to a concrete monotonicity violation.
struct SqueezeDemo {
  FnVec upper;  // φ
  FnVec lower;  // ψ <= φ
  double a = 0, b = 0, c = 0, d = 0;  // a = I(ψ) > b = I(φ), b < c < d < a
  FnVec xi;
  double value_at_xi = 0;
  double forced_by_wedge = 0;  // b: what ∧-homogeneity forces I(ξ) to be
  double forced_by_vee = 0;    // a: what ∨-homogeneity forces I(ξ) to be
  bool wedge_identities_hold = false;
  bool vee_identities_hold = false;
};

struct MonotonicityDemo {
  Report report;
  bool homogeneity_passed = false;
  bool monotone_passed = false;
  std::optional<SqueezeDemo> squeeze;

  /// Two-sided homogeneity on the samples came with monotonicity on them, and
  /// any squeeze instance breaks at least one homogeneity identity.
  bool consistent() const {
    if (homogeneity_passed && !monotone_passed) return false;
    if (squeeze && squeeze->wedge_identities_hold && squeeze->vee_identities_hold) return false;
    return true;
  }
};

inline json to_json(const SqueezeDemo& s) {
  return json{{"upper", to_json(s.upper)},   {"lower", to_json(s.lower)},
              {"a", s.a},                    {"b", s.b},
              {"c", s.c},                    {"d", s.d},
              {"xi", to_json(s.xi)},         {"I(xi)", s.value_at_xi},
              {"forced_by_wedge", s.forced_by_wedge},
              {"forced_by_vee", s.forced_by_vee},
              {"wedge_identities_hold", s.wedge_identities_hold},
              {"vee_identities_hold", s.vee_identities_hold}};
}

/**
 * Samples ∨-homogeneity, ∧-homogeneity and monotonicity of a total
 * functional. If monotonicity fails at f <= g with a = I(f) > b = I(g), builds
 * the squeeze witness ξ for (g, f) with c = b + (a-b)/3, d = b + 2(a-b)/3 and
 * evaluates both homogeneity identities at ξ: they would force I(ξ) = b and
 * I(ξ) = a at once, so at least one must fail.
 */
inline MonotonicityDemo lemma_mon_demo(const Functional& fn, const SamplingOptions& opts = {}) {
  if (!fn.total()) throw PreconditionError("lemma_mon_demo needs a total functional");
  MonotonicityDemo demo;
  demo.report = check_axioms(
      fn, {AxiomKind::vee_homogeneous(), AxiomKind::wedge_homogeneous(), AxiomKind::monotone()},
      opts);
  demo.homogeneity_passed = demo.report.checks[0].verdict == Verdict::pass &&
                            demo.report.checks[1].verdict == Verdict::pass;
  const Check& mono = demo.report.checks[2];
  demo.monotone_passed = mono.verdict == Verdict::pass;
  if (mono.verdict != Verdict::fail) return demo;

  auto vec = [](const json& j) { return FnVec(j.get<std::vector<double>>()); };
  const FnVec upper = vec(mono.witness["g"]);
  const FnVec lower = vec(mono.witness["f"]);
  const double a = mono.witness["I(f)"].get<double>();
  const double b = mono.witness["I(g)"].get<double>();
  const double c = b + (a - b) / 3.0;
  const double d = b + 2.0 * (a - b) / 3.0;
  SqueezeDemo s{upper, lower, a, b, c, d, squeeze_witness(upper, lower, c, d)};
  s.value_at_xi = fn(s.xi);
  s.forced_by_wedge = s.b;
  s.forced_by_vee = s.a;
  const double tol = opts.tolerance;
  s.wedge_identities_hold =
      approx_equal(fn(meet(s.c, s.xi)), std::min(s.value_at_xi, s.c), tol) &&
      approx_equal(fn(meet(s.c, s.upper)), std::min(s.b, s.c), tol);
  s.vee_identities_hold =
      approx_equal(fn(join(s.d, s.xi)), std::max(s.value_at_xi, s.d), tol) &&
      approx_equal(fn(join(s.d, s.lower)), std::max(s.a, s.d), tol);
  demo.squeeze = std::move(s);
  return demo;
}

}  // namespace tnint
