#include <random>

#include <gtest/gtest.h>

#include "heyting/constructors.hpp"
#include "heyting/enumeration.hpp"
#include "heyting/isomorphism.hpp"
#include "heyting/parser.hpp"
#include "heyting/principles.hpp"
#include "heyting/properties.hpp"
#include "heyting/satisfiability.hpp"

namespace heyting {
namespace {

Rational ds(const HeytingAlgebra& h, const char* eq) { return ds_equation(h, parse_equation(eq)).value; }

TEST(DsEquation, Examples) {
  EXPECT_EQ(ds(chain(3), "x | ~x = top"), Rational(2, 3));
  for (std::size_t n = 1; n <= 6; ++n) {
    auto h = adjoin_chain(boolean_algebra(n), 1);
    BigInt p = BigInt(1) << n;
    EXPECT_EQ(ds(h, "~~x = x"), Rational(p, p + 1)) << n;
  }
  for (std::size_t n = 2; n <= 20; ++n) EXPECT_EQ(ds(chain(n), "~~p = top"), Rational(n - 1, n));
  EXPECT_EQ(ds(chain(4), "top = top"), Rational(1));
  EXPECT_EQ(ds(chain(4), "bot = top"), Rational(0));
}

TEST(DsEquation, CountsAndFailingSample) {
  auto r = ds_equation(chain(3), parse_equation("x | ~x = top"));
  EXPECT_EQ(r.satisfying_count, 2);
  EXPECT_EQ(r.total_count, 3);
  ASSERT_EQ(r.witnesses_failing.size(), 1u);
  EXPECT_EQ(r.witnesses_failing[0], std::vector<Element>{1});

  auto big = ds_equation(chain(5), parse_equation("x & y = z"));
  EXPECT_EQ(big.total_count, 125);
  EXPECT_EQ(big.witnesses_failing.size(), kFailingSampleCap);
  EXPECT_EQ(big.witnesses_failing[0], (std::vector<Element>{0, 0, 1}));
}

TEST(DsEquation, IndependentOfJobs) {
  auto h = product(chain(3), boolean_algebra(2));
  auto eq = parse_equation("(x -> y) -> x = x | ~y");
  auto one = ds_equation(h, eq, 1);
  for (unsigned jobs : {2u, 3u, 5u}) {
    auto many = ds_equation(h, eq, jobs);
    EXPECT_EQ(many.value, one.value);
    EXPECT_EQ(many.witnesses_failing, one.witnesses_failing);
  }
}

TEST(DsEquation, BudgetExceeded) {
  try {
    ds_equation(boolean_algebra(10), parse_equation("a & b & c & d = top"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}

TEST(DsEquation, LemMatchesCenter) {
  for (const auto& e : default_enumeration()) {
    auto r = ds_equation(e.algebra, parse_equation("x | ~x = top"));
    EXPECT_EQ(r.satisfying_count, center(e.algebra).count());
    EXPECT_TRUE(r.value == 1 || (r.value > 0 && r.value <= Rational(2, 3)));
  }
}

TEST(DsEquation, ProductMultiplicativity) {
  const auto& all = default_enumeration();
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto& a = all[rng() % all.size()].algebra;
    const auto& b = all[rng() % all.size()].algebra;
    auto ab = product(a, b);
    for (const auto& p : classical_principles()) {
      EXPECT_EQ(ds_equation(ab, p.equation).value, ds_equation(a, p.equation).value * ds_equation(b, p.equation).value)
          << p.name;
    }
  }
}

TEST(DsEquation, NormalizationPreservesDs) {
  for (const auto& e : default_enumeration()) {
    for (const auto& p : classical_principles()) {
      EXPECT_EQ(ds_equation(e.algebra, p.equation).value, ds_equation(e.algebra, p.normalized).value);
    }
  }
}

TEST(DsFormula, Examples) {
  auto ji = parse_formula("forall y z. (x = y | z) => (x = y) or (x = z)");
  EXPECT_EQ(ds_formula(boolean_algebra(1), ji).value, Rational(1));
  EXPECT_EQ(ds_formula(boolean_algebra(2), ji).value, Rational(3, 4));
  EXPECT_EQ(ds_formula(boolean_algebra(3), ji).value, Rational(1, 2));
  EXPECT_NE(ds_formula(boolean_algebra(3), ji).value,
            ds_formula(boolean_algebra(1), ji).value * ds_formula(boolean_algebra(2), ji).value);
  EXPECT_EQ(ds_formula(chain(4), parse_formula("forall y. y | (y -> x) = top")).value, Rational(1, 2));
  EXPECT_EQ(ds_formula(chain(5), parse_formula("forall y. y = y")).value, Rational(1));
  EXPECT_EQ(ds_formula(chain(5), parse_formula("exists y. y = x")).value, Rational(1));
}

TEST(DsFormula, UniversalReductMonotone) {
  const char* bodies[] = {"x | (x -> y) = top", "x & y = x", "~x | y = x -> y", "x -> y = y"};
  for (const auto& e : default_enumeration()) {
    for (const char* body : bodies) {
      auto phi = parse_formula(body);
      auto all = Formula::forall("y", phi);
      EXPECT_LE(ds_formula(e.algebra, all).value, ds_formula(e.algebra, phi).value);
    }
  }
}

TEST(GapScan, Examples) {
  auto lem = gap_scan(parse_equation("x | ~x = top"), EnumerationBudget{});
  ASSERT_TRUE(lem.sup_below_one.has_value());
  EXPECT_EQ(*lem.sup_below_one, Rational(2, 3));
  EXPECT_EQ(lem.epsilon(), Rational(1, 3));
  EXPECT_EQ(lem.algebras_scanned, 35u);
  auto top = gap_scan(parse_equation("x = top"), EnumerationBudget{});
  EXPECT_EQ(*top.sup_below_one, Rational(1, 2));
  auto dne = gap_scan(parse_equation("~~x = x"), EnumerationBudget{});
  EXPECT_GE(*dne.sup_below_one, Rational(4, 5));
  auto trivial = gap_scan(parse_equation("x = x"), EnumerationBudget{});
  EXPECT_FALSE(trivial.sup_below_one.has_value());
  for (const auto& entry : lem.algebras_below_one) EXPECT_LT(entry.ds.value, 1);
  EXPECT_EQ(gap_scan(parse_equation("x | ~x = top"), EnumerationBudget{}, 3).algebras_below_one.size(),
            lem.algebras_below_one.size());
}

TEST(Countermodel, Examples) {
  EXPECT_TRUE(is_isomorphic(find_countermodel(parse_term("p | ~p")), chain(3)).has_value());
  EXPECT_TRUE(is_isomorphic(find_countermodel(parse_term("~~p -> p")), chain(3)).has_value());
  // ~p -> p already fails at bot in the two-element algebra.
  EXPECT_TRUE(is_isomorphic(find_countermodel(parse_term("~~p")), chain(2)).has_value());
  EXPECT_EQ(find_countermodel(rn_formula(RnKind::Disjunctive, 5).term).size(), 9u);
  EXPECT_EQ(find_countermodel(rn_formula(RnKind::Disjunctive, 7).term).size(), 13u);
  try {
    find_countermodel(parse_term("p -> p"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotFoundWithinBudget);
  }
}

TEST(WitnessFamily, AllNoGapFormulas) {
  for (unsigned n = 3; n <= 5; ++n) {
    for (auto kind : {RnKind::Implicative, RnKind::Disjunctive}) {
      auto f = rn_formula(kind, n);
      auto fam = witness_family(f.term, 30);
      EXPECT_EQ(fam.rn, f.name());
      EXPECT_EQ(fam.members.size(), 31u);
      EXPECT_TRUE(fam.all_below_one()) << f.name();
      EXPECT_TRUE(fam.bounds_hold()) << f.name();
      EXPECT_TRUE(fam.nondecreasing()) << f.name();
      for (const auto& m : fam.members) EXPECT_TRUE(m.failure_preserved) << f.name() << " k=" << m.k;
    }
  }
}

TEST(WitnessFamily, ChainsForI2) {
  auto fam = witness_family(parse_term("~~p"), 10);
  EXPECT_EQ(fam.base_size, 2u);
  for (const auto& m : fam.members) {
    EXPECT_TRUE(is_isomorphic(m.algebra, chain(4 + m.k)).has_value());
    EXPECT_EQ(m.ds.value, Rational(3 + m.k, 4 + m.k));
  }
}

TEST(WitnessFamily, RejectsGapEquations) {
  for (const char* t : {"p", "~p", "p | ~p", "bot", "p -> p"}) {
    try {
      witness_family(parse_term(t), 3);
      FAIL() << t;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::GapEquation);
    }
  }
}

TEST(ClassifyOneVar, Examples) {
  auto lem = classify_one_var(parse_term("p | ~p"));
  EXPECT_EQ(lem.outcome, Outcome::Gap);
  EXPECT_EQ(*lem.epsilon, Rational(1, 3));
  auto neg = classify_one_var(parse_term("~p"));
  EXPECT_EQ(*neg.epsilon, Rational(1, 2));
  EXPECT_EQ(classify_one_var(parse_term("p")).outcome, Outcome::Gap);
  EXPECT_EQ(classify_one_var(parse_term("bot")).outcome, Outcome::NeverSatisfiable);
  EXPECT_EQ(classify_one_var(parse_term("p -> p")).outcome, Outcome::AlwaysSatisfied);
  auto dne = classify_one_var(parse_equation("~~p = p"));
  EXPECT_EQ(dne.outcome, Outcome::NoGap);
  EXPECT_EQ(dne.rn, "i3");
  try {
    classify_one_var(parse_term("p | q"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MultiVariable);
  }
}

TEST(ClassifyOneVar, GapOutcomesMatchScan) {
  // The scanned sup agrees with the classification for each gap formula.
  for (const char* t : {"p", "~p", "p | ~p"}) {
    auto c = classify_one_var(parse_term(t));
    auto scan = gap_scan({parse_term(t), Term::top()}, EnumerationBudget{});
    EXPECT_EQ(scan.epsilon(), *c.epsilon) << t;
  }
}

TEST(MaterialImplication, Profiles) {
  auto p2 = material_implication_profile(2);
  EXPECT_EQ(p2.algebra.size(), 5u);
  EXPECT_EQ(p2.materializer_bound, 11);
  EXPECT_GE(p2.materializer_total, 11);
  EXPECT_EQ(p2.lower_bound, Rational(37, 64));
  EXPECT_TRUE(p2.holds());
  for (std::size_t n = 1; n <= 6; ++n) {
    auto p = material_implication_profile(n);
    // Closed form: the failing pairs are x <= y with x a nonzero element of B_n.
    BigInt size = (BigInt(1) << n) + 1;
    BigInt fails = boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(n)) - (BigInt(1) << n);
    EXPECT_EQ(p.ds.value, Rational(size * size - fails, size * size)) << n;
    EXPECT_TRUE(p.below_one());
    EXPECT_TRUE(p.materializer_bound_holds()) << n;
    // The bound 1 - (3/4)^(n+1) only holds up to n = 4.
    EXPECT_EQ(p.meets_lower_bound(), n <= 4) << n;
  }
}

}  // namespace
}  // namespace heyting
