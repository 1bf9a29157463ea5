#include <random>

#include <gtest/gtest.h>

#include "heyting/constructors.hpp"
#include "heyting/enumeration.hpp"
#include "heyting/eval.hpp"
#include "heyting/ipc.hpp"
#include "heyting/parser.hpp"
#include "heyting/principles.hpp"
#include "heyting/properties.hpp"
#include "heyting/rieger_nishimura.hpp"

namespace heyting {
namespace {

Term random_term(std::mt19937_64& rng, int depth, const std::vector<std::string>& vars) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 5);
  switch (pick(rng)) {
    case 0: return Term::var(vars[rng() % vars.size()]);
    case 1: return rng() % 4 ? Term::var(vars[rng() % vars.size()]) : (rng() % 2 ? Term::bot() : Term::top());
    case 2: return Term::meet(random_term(rng, depth - 1, vars), random_term(rng, depth - 1, vars));
    case 3: return Term::join(random_term(rng, depth - 1, vars), random_term(rng, depth - 1, vars));
    case 4: return Term::neg(random_term(rng, depth - 1, vars));
    default: return Term::imp(random_term(rng, depth - 1, vars), random_term(rng, depth - 1, vars));
  }
}

// Semantic oracle: t = top under every assignment in every given algebra.
bool valid_in(const std::vector<HeytingAlgebra>& algebras, const Term& t) {
  auto vars = free_variables(t);
  std::map<std::string, std::size_t> slots;
  for (std::size_t i = 0; i < vars.size(); ++i) slots[vars[i]] = i;
  CompiledTerm code(t, slots);
  std::vector<Element> scratch;
  for (const auto& h : algebras) {
    std::vector<Element> env(vars.size(), 0);
    while (true) {
      if (code.eval(h, env.data(), scratch) != h.top()) return false;
      std::size_t i = env.size();
      while (i > 0 && env[i - 1] + 1u == h.size()) env[--i] = 0;
      if (i == 0) break;
      ++env[i - 1];
    }
  }
  return true;
}

std::vector<HeytingAlgebra> oracle_algebras() {
  std::vector<HeytingAlgebra> out;
  for (const auto& e : default_enumeration()) out.push_back(e.algebra);
  for (std::size_t n = 9; n <= 12; ++n) out.push_back(chain(n));
  return out;
}

TEST(Ipc, Examples) {
  EXPECT_TRUE(ipc_proves(parse_term("p -> p")));
  EXPECT_FALSE(ipc_proves(parse_term("p | ~p")));
  EXPECT_TRUE(ipc_proves(parse_term("~~(p | ~p)")));
  EXPECT_TRUE(valid_in(oracle_algebras(), parse_term("~~(p | ~p)")));
  EXPECT_FALSE(ipc_proves(parse_term("~~p -> p")));
  EXPECT_TRUE(ipc_proves(parse_term("p -> ~~p")));
  EXPECT_TRUE(ipc_proves(parse_term("~~~p -> ~p")));
  EXPECT_FALSE(ipc_proves(parse_term("((p -> q) -> p) -> p")));
  EXPECT_TRUE(ipc_proves(parse_term("(p -> q) -> (q -> r) -> p -> r")));
  EXPECT_TRUE(ipc_proves(parse_term("(p | q) & r -> p & r | q & r")));
  EXPECT_FALSE(ipc_proves(parse_term("(p -> q) | (q -> p)")));
  EXPECT_TRUE(ipc_proves(parse_term("top")));
  EXPECT_FALSE(ipc_proves(parse_term("bot")));
  EXPECT_TRUE(ipc_proves(parse_term("bot -> q")));
  EXPECT_TRUE(ipc_proves(parse_term("~~(~~p -> p)")));
}

TEST(Ipc, SoundAndRefutedBySemantics) {
  const auto algebras = oracle_algebras();
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    std::vector<std::string> vars = i % 2 ? std::vector<std::string>{"p"} : std::vector<std::string>{"p", "q"};
    Term t = random_term(rng, 4, vars);
    bool semantic = valid_in(algebras, t);
    EXPECT_EQ(ipc_proves(t), semantic) << to_string(t);
  }
}

TEST(Ipc, PruningDoesNotChangeAnswers) {
  std::mt19937_64 rng(5);
  IpcOptions plain;
  plain.classical_pruning = false;
  for (int i = 0; i < 150; ++i) {
    Term t = random_term(rng, 4, {"p", "q"});
    EXPECT_EQ(ipc_proves(t), ipc_proves(t, plain)) << to_string(t);
  }
}

TEST(RiegerNishimura, Formulas) {
  EXPECT_EQ(rn_formula(RnKind::Disjunctive, 2).term, parse_term("~p | p"));
  EXPECT_EQ(rn_formula(RnKind::Implicative, 2).term, parse_term("~p -> p"));
  EXPECT_TRUE(ipc_equivalent(rn_formula(RnKind::Implicative, 2).term, parse_term("~~p")));
  EXPECT_TRUE(ipc_equivalent(rn_formula(RnKind::Disjunctive, 2).term, parse_term("p | ~p")));
  EXPECT_TRUE(ipc_equivalent(rn_formula(RnKind::Implicative, 3).term, parse_term("~~p -> p")));
  EXPECT_EQ(rn_formula(RnKind::Disjunctive, 0).name(), "i0");
  EXPECT_EQ(rn_formula(RnKind::Disjunctive, 0).term, Term::bot());
}

TEST(RiegerNishimura, HasseEdgesProvedAndConversesRefuted) {
  for (const auto& [lo, hi] : rn_hasse_edges(7)) {
    EXPECT_TRUE(ipc_proves(Term::imp(lo.term, hi.term))) << lo.name() << " <= " << hi.name();
    EXPECT_FALSE(ipc_proves(Term::imp(hi.term, lo.term))) << hi.name() << " <= " << lo.name();
  }
  for (unsigned m = 1; m <= 7; ++m)
    for (unsigned n = m + 1; n <= 7; ++n)
      EXPECT_TRUE(ipc_proves(Term::imp(rn_formula(RnKind::Disjunctive, m).term, rn_formula(RnKind::Disjunctive, n).term)));
}

TEST(RiegerNishimura, Classify) {
  EXPECT_EQ(rn_classify(parse_term("~~p -> p")).name(), "i3");
  EXPECT_EQ(rn_classify(parse_term("p | ~p")).name(), "d2");
  EXPECT_EQ(rn_classify(parse_term("p -> p")).name(), "top");
  EXPECT_EQ(rn_classify(parse_term("~~p")).name(), "i2");
  EXPECT_EQ(rn_classify(parse_term("p & ~p")).name(), "i0");
  EXPECT_EQ(rn_classify(parse_term("~~~p")).name(), "i1");
  EXPECT_EQ(rn_classify(parse_term("x")).name(), "d1");
  for (unsigned n = 0; n <= 6; ++n) {
    EXPECT_EQ(rn_classify(rn_formula(RnKind::Disjunctive, n).term).name(), rn_formula(RnKind::Disjunctive, n).name());
    EXPECT_EQ(rn_classify(rn_formula(RnKind::Implicative, n).term).name(), rn_formula(RnKind::Implicative, n).name());
  }
  try {
    rn_classify(parse_term("p -> q"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MultiVariable);
  }
}

TEST(Principles, NormalizeSystem) {
  auto x = Term::var("x"), y = Term::var("y");
  EXPECT_EQ(normalize_system(parse_equation("x = y")).lhs, Term::meet(Term::imp(x, y), Term::imp(y, x)));
  EXPECT_EQ(normalize_system({parse_equation("x = top"), parse_equation("y = top")}).lhs, Term::meet(x, y));
  EXPECT_EQ(normalize_system(parse_equation("top = x | ~x")).lhs, parse_term("x | ~x"));
  EXPECT_THROW(normalize_system(std::vector<Equation>{}), Error);
}

TEST(Principles, NormalizationPreservesSolutions) {
  std::mt19937_64 rng(3);
  const auto& all = default_enumeration();
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Equation> system;
    for (int k = 0; k <= trial % 3; ++k)
      system.push_back({random_term(rng, 3, {"x", "y"}), random_term(rng, 3, {"x", "y"})});
    Equation normal = normalize_system(system);
    const auto& h = all[rng() % all.size()].algebra;
    for (Element a = 0; a < h.size(); ++a) {
      for (Element b = 0; b < h.size(); ++b) {
        std::map<std::string, Element> env{{"x", a}, {"y", b}};
        bool each = true;
        for (const auto& e : system) each = each && eval_term(h, e.lhs, env) == eval_term(h, e.rhs, env);
        EXPECT_EQ(each, eval_term(h, normal.lhs, env) == h.top());
      }
    }
  }
}

TEST(Principles, CatalogEntriesAreClassicalPrinciples) {
  for (const auto& p : classical_principles()) {
    for (const auto& e : default_enumeration()) {
      bool holds = valid_in({e.algebra}, p.normalized.lhs);
      EXPECT_EQ(holds, is_boolean(e.algebra)) << p.name << " on size " << e.algebra.size();
    }
    EXPECT_FALSE(ipc_proves(p.normalized.lhs)) << p.name;
  }
  EXPECT_EQ(classical_principle("peirce").equation, parse_equation("(x -> y) -> x = x"));
}

TEST(Principles, YankovReduction) {
  auto peirce = parse_term("((x -> y) -> x) -> x");
  auto sigma = yankov_reduce(peirce, {"x", "y"});
  EXPECT_EQ(sigma.at("x"), Term::var("p"));
  EXPECT_EQ(sigma.at("y"), Term::bot());
  EXPECT_TRUE(ipc_proves(parse_term("((~p -> p) -> p) -> ~~p -> p")));
  EXPECT_TRUE(ipc_proves(parse_term("(p | ~p) -> ~~p -> p")));
  for (const auto& p : classical_principles()) {
    auto s = yankov_reduce(p.normalized.lhs, free_variables(p.normalized.lhs));
    auto inst = substitute(p.normalized.lhs, s);
    EXPECT_TRUE(ipc_proves(Term::imp(inst, parse_term("~~p -> p")))) << p.name;
  }
  // p is already used, so a fresh name stands in for it.
  auto t = parse_term("(p -> p) & (q | ~q)");
  auto s = yankov_reduce(t, {"q"});
  EXPECT_EQ(s.at("q"), Term::var("p1"));
  try {
    yankov_reduce(parse_term("x -> x"), {"x"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoSubstitutionFound);
  }
}

}  // namespace
}  // namespace heyting
