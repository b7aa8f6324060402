#include <gtest/gtest.h>

#include <tnint/tnorm.hpp>

using namespace tnint;

TEST(TNorm, BuiltinValues) {
  EXPECT_DOUBLE_EQ(TNorm::minimum()(0.3, 0.7), 0.3);
  EXPECT_DOUBLE_EQ(TNorm::product()(0.5, 1.0), 0.5);
  EXPECT_DOUBLE_EQ(TNorm::lukasiewicz()(0.5, 0.5), 0.0);
  EXPECT_DOUBLE_EQ(TNorm::lukasiewicz()(0.75, 0.5), 0.25);
}

TEST(TNorm, RejectsOutOfRangeArguments) {
  EXPECT_THROW(TNorm::product()(1.5, 0.2), InputError);
  EXPECT_THROW(TNorm::minimum()(-0.1, 0.2), InputError);
  EXPECT_THROW(TNorm::minimum()(std::nan(""), 0.2), InputError);
  auto bad = TNorm::custom("twice", [](double a, double b) { return 2 * a * b; });
  EXPECT_THROW(bad(0.9, 0.9), InputError);
}

TEST(TNorm, ByName) {
  EXPECT_EQ(TNorm::by_name("product").kind(), TNorm::Kind::product);
  EXPECT_EQ(TNorm::by_name("min").kind(), TNorm::Kind::minimum);
  EXPECT_EQ(TNorm::by_name("lukasiewicz").kind(), TNorm::Kind::lukasiewicz);
  EXPECT_THROW(TNorm::by_name("hamacher"), InputError);
}

TEST(TNormAxioms, BuiltinsPassEverything) {
  for (const auto& op : builtin_tnorms()) {
    Report r = check_tnorm_axioms(op, 20);
    EXPECT_TRUE(r.passed()) << to_json(r).dump(2);
    for (const char* name : {"unit", "commutativity", "associativity", "monotonicity",
                             "distributivity-over-max", "continuity-modulus-estimate"}) {
      EXPECT_EQ(r.verdict(name), Verdict::pass) << op.name() << " " << name;
    }
  }
}

TEST(TNormAxioms, LukasiewiczDistributivityOnAllTriples) {
  Report r = check_tnorm_axioms(TNorm::lukasiewicz(), 20);
  const Check* d = r.find("distributivity-over-max");
  ASSERT_NE(d, nullptr);
  EXPECT_EQ(d->verdict, Verdict::pass);
  EXPECT_EQ(d->samples, 21u * 21u * 21u);
}

TEST(TNormAxioms, MaxViolatesUnitLaw) {
  auto max_op = TNorm::custom("max", [](double a, double b) { return std::max(a, b); });
  Report r = check_tnorm_axioms(max_op, 20);
  EXPECT_EQ(r.verdict("unit"), Verdict::fail);
  const Check* unit = r.find("unit");
  // The witness is a genuine violation.
  const double a = unit->witness["a"].get<double>();
  EXPECT_FALSE(approx_equal(max_op.raw(a, 1.0), a));
  // a = 0.5 is one: max(0.5, 1) = 1 != 0.5.
  EXPECT_DOUBLE_EQ(max_op.raw(0.5, 1.0), 1.0);
  // max is still commutative, associative, monotone.
  EXPECT_EQ(r.verdict("commutativity"), Verdict::pass);
  EXPECT_EQ(r.verdict("associativity"), Verdict::pass);
  EXPECT_EQ(r.verdict("monotonicity"), Verdict::pass);
}

TEST(TNormAxioms, DrasticProductHasLargeContinuityModulus) {
  auto drastic = TNorm::custom("drastic", [](double a, double b) {
    if (a == 1.0) return b;
    if (b == 1.0) return a;
    return 0.0;
  });
  Report r = check_tnorm_axioms(drastic, 20);
  EXPECT_EQ(r.verdict("unit"), Verdict::pass);
  EXPECT_EQ(r.verdict("continuity-modulus-estimate"), Verdict::fail);
  EXPECT_NEAR(r.find("continuity-modulus-estimate")->detail["modulus"].get<double>(), 0.95, 1e-12);
}

TEST(TNormAxioms, NonCommutativeWitness) {
  auto skew = TNorm::custom("skew", [](double a, double b) { return a * b * b; });
  Report r = check_tnorm_axioms(skew, 10);
  EXPECT_EQ(r.verdict("commutativity"), Verdict::fail);
  EXPECT_TRUE(r.find("commutativity")->witness.contains("a*b"));
}

TEST(TNormAxioms, RejectsCoarseGrid) {
  EXPECT_THROW(check_tnorm_axioms(TNorm::product(), 5), InputError);
  EXPECT_NO_THROW(check_tnorm_axioms(TNorm::product(), 9));
}

// apply(a,b) <= min(a,b) for every built-in on the grid: a consequence of
// the unit law and monotonicity.
TEST(TNormProperties, BoundedByMinimum) {
  const auto grid = uniform_grid(20);
  for (const auto& op : builtin_tnorms())
    for (double a : grid)
      for (double b : grid) EXPECT_LE(op(a, b), std::min(a, b) + kTolerance);
}
