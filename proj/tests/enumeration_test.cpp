#include <map>
#include <random>

#include <gtest/gtest.h>

#include "heyting/constructors.hpp"
#include "heyting/enumeration.hpp"
#include "heyting/isomorphism.hpp"
#include "heyting/properties.hpp"

namespace heyting {
namespace {

// Independent oracle: every finite poset has a linear extension, so every
// lattice of size n with bottom 0 and top n-1 appears among the
// upper-triangular relations on the middle points. Validate each with
// heyting_from_leq and dedup with is_isomorphic.
std::vector<HeytingAlgebra> labelled_oracle(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j + 1 < n; ++j) pairs.emplace_back(i, j);
  std::vector<HeytingAlgebra> reps;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Poset p(n);
    for (std::size_t x = 0; x < n; ++x) {
      p.set_leq(0, x, true);
      p.set_leq(x, n - 1, true);
    }
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1u) p.set_leq(pairs[k].first, pairs[k].second, true);
    if (p.violation()) continue;
    HeytingAlgebra h;
    try {
      h = heyting_from_leq(p);
    } catch (const Error&) {
      continue;
    }
    bool seen = false;
    for (const auto& r : reps) {
      if (is_isomorphic(r, h)) {
        seen = true;
        break;
      }
    }
    if (!seen) reps.push_back(std::move(h));
  }
  return reps;
}

std::map<std::size_t, std::size_t> counts_by_size(const std::vector<EnumeratedAlgebra>& all) {
  std::map<std::size_t, std::size_t> counts;
  for (const auto& e : all) ++counts[e.algebra.size()];
  return counts;
}

TEST(Chain, Examples) {
  EXPECT_TRUE(is_boolean(chain(2)));
  auto c3 = chain(3);
  EXPECT_EQ(c3.neg(1), c3.bot());
  auto c4 = chain(4);
  std::size_t dense = 0;
  for (Element x = 0; x < 4; ++x) dense += c4.neg(c4.neg(x)) == c4.top();
  EXPECT_EQ(dense, 3u);
  EXPECT_THROW(chain(1), Error);
  EXPECT_FALSE(check_axioms(chain(9)).has_value());
}

TEST(BooleanAlgebra, Examples) {
  try {
    boolean_algebra(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Degenerate);
  }
  EXPECT_TRUE(is_isomorphic(boolean_algebra(1), chain(2)).has_value());
  auto b3 = boolean_algebra(3);
  EXPECT_EQ(b3.size(), 8u);
  EXPECT_TRUE(is_boolean(b3));
  std::size_t sum = 0;
  for (Element x = 0; x < 8; ++x) sum += upset(b3, x).count();
  EXPECT_EQ(sum, 27u);
  EXPECT_FALSE(check_axioms(boolean_algebra(4)).has_value());
  try {
    boolean_algebra(12);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}

TEST(Product, Examples) {
  auto p = product(chain(2), chain(2));
  EXPECT_FALSE(check_axioms(p).has_value());
  EXPECT_TRUE(is_isomorphic(p, boolean_algebra(2)).has_value());

  auto q = product(chain(3), chain(2));
  EXPECT_FALSE(check_axioms(q).has_value());
  EXPECT_EQ(center(q).count(), 4u);

  for (const auto& e : default_enumeration()) {
    auto r = product(e.algebra, chain(2));
    EXPECT_EQ(is_boolean(r), is_boolean(e.algebra));
  }
}

TEST(Product, CommutativeAndAssociativeUpToIsomorphism) {
  const auto& all = default_enumeration();
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto& a = all[pick(rng)].algebra;
    const auto& b = all[pick(rng)].algebra;
    const auto& c = all[pick(rng)].algebra;
    EXPECT_TRUE(is_isomorphic(product(a, b), product(b, a)).has_value());
    if (a.size() * b.size() * c.size() <= 256) {
      EXPECT_TRUE(is_isomorphic(product(product(a, b), c), product(a, product(b, c))).has_value());
    }
  }
}

TEST(AdjoinChain, Examples) {
  const auto& all = default_enumeration();
  for (const auto& e : all) {
    for (std::size_t k = 0; k <= 3; ++k) {
      auto h = adjoin_chain(e.algebra, k);
      EXPECT_EQ(h.size(), e.algebra.size() + k);
      EXPECT_FALSE(check_axioms(h).has_value());
    }
  }
  EXPECT_TRUE(is_isomorphic(adjoin_chain(chain(2), 1), chain(3)).has_value());
}

TEST(AdjoinChain, NegationOfEmbeddedElementsIsUnchanged) {
  auto b = boolean_algebra(2);
  auto h = adjoin_chain(b, 1);
  for (Element x = 1; x < b.size(); ++x) EXPECT_EQ(h.neg(x), b.neg(x));
  // Bottom negates to the new top, not to the embedded old top.
  EXPECT_EQ(h.neg(h.bot()), h.top());
  EXPECT_NE(h.neg(h.bot()), b.top());
}

TEST(AdjoinChain, Recursion) {
  for (const auto& e : default_enumeration()) {
    if (e.algebra.size() > 6) continue;
    for (std::size_t j = 0; j <= 2; ++j)
      for (std::size_t k = 0; k <= 2; ++k)
        EXPECT_TRUE(is_isomorphic(adjoin_chain(e.algebra, j + k),
                                  adjoin_chain(adjoin_chain(e.algebra, j), k))
                        .has_value());
  }
}

TEST(DownsetLattice, Examples) {
  try {
    downset_lattice(Poset(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Degenerate);
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    auto h = downset_lattice(Poset(n));  // antichain
    EXPECT_TRUE(is_isomorphic(h, boolean_algebra(n)).has_value());
    Poset c(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) c.set_leq(a, b, true);
    EXPECT_TRUE(is_isomorphic(downset_lattice(c), chain(n + 1)).has_value());
  }
}

TEST(DownsetLattice, SoundOnEverySmallPoset) {
  for (const auto& p : enumerate_small_posets(5, 64)) {
    if (p.size() == 0) continue;
    auto h = downset_lattice(p.to_poset());
    auto problem = check_axioms(h);
    EXPECT_FALSE(problem.has_value()) << *problem;
  }
}

TEST(SmallPosets, KnownUnlabelledCounts) {
  // Unlabelled posets on 0..5 points: 1, 1, 2, 5, 16, 63.
  std::map<std::size_t, std::size_t> counts;
  for (const auto& p : enumerate_small_posets(5, 1u << 6)) ++counts[p.size()];
  EXPECT_EQ(counts, (std::map<std::size_t, std::size_t>{{0, 1}, {1, 1}, {2, 2}, {3, 5}, {4, 16}, {5, 63}}));
}

TEST(EnumerateHeyting, CountsPerSize) {
  auto counts = counts_by_size(default_enumeration());
  std::map<std::size_t, std::size_t> expected{{2, 1}, {3, 1}, {4, 2}, {5, 3}, {6, 5}, {7, 8}, {8, 15}};
  EXPECT_EQ(counts, expected);
}

TEST(EnumerateHeyting, AgreesWithLabelledOracle) {
  const auto& all = default_enumeration();
  for (std::size_t n = 2; n <= 7; ++n) {
    auto oracle = labelled_oracle(n);
    std::vector<const HeytingAlgebra*> ours;
    for (const auto& e : all) {
      if (e.algebra.size() == n) ours.push_back(&e.algebra);
    }
    ASSERT_EQ(oracle.size(), ours.size()) << "size " << n;
    for (const auto& o : oracle) {
      std::size_t matches = 0;
      for (const auto* h : ours) matches += is_isomorphic(o, *h).has_value();
      EXPECT_EQ(matches, 1u);
    }
  }
}

TEST(EnumerateHeyting, SizeThreeIsTheChain) {
  for (const auto& e : default_enumeration()) {
    if (e.algebra.size() == 3) {
      EXPECT_TRUE(is_isomorphic(e.algebra, chain(3)).has_value());
    }
  }
}

TEST(EnumerateHeyting, OutputValidatesAndIsSorted) {
  const auto& all = default_enumeration();
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_NO_THROW(heyting_from_leq(all[i].algebra.poset()));
    if (i > 0) {
      auto prev = std::make_pair(all[i - 1].algebra.size(), all[i - 1].code);
      auto cur = std::make_pair(all[i].algebra.size(), all[i].code);
      EXPECT_LT(prev, cur);
    }
  }
}

TEST(EnumerateHeyting, IndependentOfJobs) {
  EnumerationBudget budget{9, 8};
  auto one = enumerate_heyting(budget, 1);
  auto three = enumerate_heyting(budget, 3);
  ASSERT_EQ(one.size(), three.size());
  for (std::size_t i = 0; i < one.size(); ++i) EXPECT_EQ(one[i].code, three[i].code);
  EXPECT_EQ(counts_by_size(one)[9], 26u);
}

}  // namespace
}  // namespace heyting
