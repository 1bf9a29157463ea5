#pragma once

#include <algorithm>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heyting/constructors.hpp"
#include "heyting/enumeration.hpp"
#include "heyting/eval.hpp"
#include "heyting/formula.hpp"
#include "heyting/ipc.hpp"
#include "heyting/principles.hpp"
#include "heyting/properties.hpp"
#include "heyting/rational.hpp"
#include "heyting/rieger_nishimura.hpp"

namespace heyting {

inline constexpr std::size_t kFailingSampleCap = 16;
inline constexpr std::uint64_t kMaxAssignments = 1'000'000'000;

struct DsResult {
  std::vector<std::string> variables;
  BigInt satisfying_count = 0;
  BigInt total_count = 1;
  Rational value = 1;
  /// First failing tuples in row-major order, at most kFailingSampleCap.
  std::vector<std::vector<Element>> witnesses_failing;
};

namespace detail {

struct Tally {
  std::uint64_t satisfying = 0;
  std::vector<std::vector<Element>> failing;
};

inline std::uint64_t assignment_count(std::size_t n, std::size_t vars) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < vars; ++i) {
    if (total > kMaxAssignments / n) {
      throw Error(ErrorKind::BudgetExceeded, std::to_string(n) + "^" + std::to_string(vars) +
                                                 " assignments exceed the budget of " +
                                                 std::to_string(kMaxAssignments));
    }
    total *= n;
  }
  return total;
}

/// Counts tuples satisfying `test` in row-major order. With several jobs the
/// first variable is split into contiguous ranges and the tallies merged in
/// order, so the result does not depend on the partition.
template <class MakeTest>
DsResult count_assignments(const HeytingAlgebra& h, const std::vector<std::string>& vars, MakeTest make_test,
                           std::size_t env_size, unsigned jobs) {
  const std::size_t n = h.size();
  const std::size_t k = vars.size();
  const std::uint64_t total = assignment_count(n, k);

  auto run = [&](std::size_t first_begin, std::size_t first_end) {
    Tally tally;
    auto test = make_test();
    std::vector<Element> env(std::max<std::size_t>(env_size, 1), 0);
    if (k == 0) {
      if (first_begin == 0 && first_end > 0) {
        if (test(env)) ++tally.satisfying;
        else tally.failing.emplace_back();
      }
      return tally;
    }
    env[0] = static_cast<Element>(first_begin);
    if (first_begin >= first_end) return tally;
    while (true) {
      if (test(env)) {
        ++tally.satisfying;
      } else if (tally.failing.size() < kFailingSampleCap) {
        tally.failing.emplace_back(env.begin(), env.begin() + static_cast<std::ptrdiff_t>(k));
      }
      std::size_t i = k;
      while (i > 1 && env[i - 1] + 1u == n) env[--i] = 0;
      if (i == 1) {
        if (env[0] + 1u == first_end) break;
        for (std::size_t j = 1; j < k; ++j) env[j] = 0;
        ++env[0];
      } else {
        ++env[i - 1];
      }
    }
    return tally;
  };

  std::vector<Tally> parts;
  const std::size_t first_range = k == 0 ? 1 : n;
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(first_range)));
  if (jobs == 1) {
    parts.push_back(run(0, first_range));
  } else {
    std::vector<std::future<Tally>> futures;
    const std::size_t chunk = (first_range + jobs - 1) / jobs;
    for (std::size_t b = 0; b < first_range; b += chunk)
      futures.push_back(std::async(std::launch::async, run, b, std::min(first_range, b + chunk)));
    for (auto& f : futures) parts.push_back(f.get());
  }

  DsResult r;
  r.variables = vars;
  std::uint64_t sat = 0;
  for (auto& p : parts) {
    sat += p.satisfying;
    for (auto& w : p.failing)
      if (r.witnesses_failing.size() < kFailingSampleCap) r.witnesses_failing.push_back(std::move(w));
  }
  r.satisfying_count = sat;
  r.total_count = total;
  r.value = Rational(r.satisfying_count, r.total_count);
  return r;
}

}  // namespace detail

/// Exact fraction of assignments to the free variables solving eq.
inline DsResult ds_equation(const HeytingAlgebra& h, const Equation& eq, unsigned jobs = 1) {
  const auto vars = free_variables(eq);
  std::map<std::string, std::size_t> slots;
  for (std::size_t i = 0; i < vars.size(); ++i) slots[vars[i]] = i;
  const CompiledTerm lhs(eq.lhs, slots), rhs(eq.rhs, slots);
  auto make_test = [&] {
    return [&, scratch = std::vector<Element>()](const std::vector<Element>& env) mutable {
      Element l = lhs.eval(h, env.data(), scratch);
      return l == rhs.eval(h, env.data(), scratch);
    };
  };
  return detail::count_assignments(h, vars, make_test, vars.size(), jobs);
}

/// Same for a first-order formula; quantifiers are evaluated inside.
inline DsResult ds_formula(const HeytingAlgebra& h, const Formula& f, unsigned jobs = 1) {
  const auto vars = free_variables(f);
  const CompiledFormula code(f, vars);
  auto make_test = [&] {
    return [&, scratch = std::vector<Element>()](const std::vector<Element>& env) mutable {
      auto local = env;
      return code.eval(h, local, scratch);
    };
  };
  return detail::count_assignments(h, vars, make_test, code.slot_count(), jobs);
}

struct GapEntry {
  std::string code;
  std::size_t size;
  DsResult ds;
};

struct GapReport {
  Equation equation;
  std::size_t min_size = 2;
  std::size_t max_size = 0;
  std::size_t algebras_scanned = 0;
  std::vector<GapEntry> algebras_below_one;
  /// Absent when every scanned algebra satisfies the equation identically.
  std::optional<Rational> sup_below_one;

  /// Empirical gap 1 - sup, or 1 when nothing fails.
  Rational epsilon() const { return sup_below_one ? Rational(1) - *sup_below_one : Rational(1); }
};

inline GapReport gap_scan(const Equation& eq, const std::vector<EnumeratedAlgebra>& algebras, unsigned jobs = 1) {
  GapReport report;
  report.equation = eq;
  std::vector<DsResult> results(algebras.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) results[i] = ds_equation(algebras[i].algebra, eq);
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1 || algebras.size() < 2) {
    work(0, algebras.size());
  } else {
    std::vector<std::future<void>> fs;
    const std::size_t chunk = (algebras.size() + jobs - 1) / jobs;
    for (std::size_t b = 0; b < algebras.size(); b += chunk)
      fs.push_back(std::async(std::launch::async, work, b, std::min(algebras.size(), b + chunk)));
    for (auto& f : fs) f.get();
  }
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    const auto& e = algebras[i];
    ++report.algebras_scanned;
    report.max_size = std::max(report.max_size, e.algebra.size());
    if (results[i].value < 1) {
      if (!report.sup_below_one || results[i].value > *report.sup_below_one) report.sup_below_one = results[i].value;
      report.algebras_below_one.push_back({e.code, e.algebra.size(), std::move(results[i])});
    }
  }
  return report;
}

inline GapReport gap_scan(const Equation& eq, const EnumerationBudget& budget, unsigned jobs = 1) {
  if (budget.max_algebra_size == EnumerationBudget{}.max_algebra_size &&
      budget.max_ji_poset_size == EnumerationBudget{}.max_ji_poset_size)
    return gap_scan(eq, default_enumeration(), jobs);
  return gap_scan(eq, enumerate_heyting(budget, jobs), jobs);
}

/// Smallest enumerated algebra (in enumeration order) refuting t = top.
inline HeytingAlgebra find_countermodel(const Term& t, const std::vector<EnumeratedAlgebra>& algebras) {
  const Equation eq{t, Term::top()};
  for (const auto& e : algebras)
    if (ds_equation(e.algebra, eq).value < 1) return e.algebra;
  throw Error(ErrorKind::NotFoundWithinBudget, "no enumerated algebra refutes " + to_string(t));
}

inline constexpr std::size_t kCountermodelMaxSize = 16;

/// Searches the default enumeration first, then all algebras up to max_size.
inline HeytingAlgebra find_countermodel(const Term& t, std::size_t max_size = kCountermodelMaxSize) {
  try {
    return find_countermodel(t, default_enumeration());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotFoundWithinBudget || max_size <= EnumerationBudget{}.max_algebra_size) throw;
  }
  return find_countermodel(t, cached_enumeration(max_size));
}

struct WitnessMember {
  std::size_t k;
  HeytingAlgebra algebra;
  DsResult ds;
  Rational lower_bound;
  /// The element that refutes the term in the base still refutes it here.
  bool failure_preserved = false;
};

struct WitnessFamily {
  std::string rn;
  std::string recipe;
  std::size_t base_size = 0;  // |H'|
  std::vector<WitnessMember> members;

  bool all_below_one() const {
    return std::all_of(members.begin(), members.end(), [](const auto& m) { return m.ds.value < 1; });
  }
  bool bounds_hold() const {
    return std::all_of(members.begin(), members.end(), [](const auto& m) { return m.ds.value >= m.lower_bound; });
  }
  bool nondecreasing() const {
    for (std::size_t i = 1; i < members.size(); ++i)
      if (members[i].ds.value < members[i - 1].ds.value) return false;
    return true;
  }
};

/// ceil(log2(k + 2)): smallest m with 2^m >= k + 2.
inline std::size_t witness_atoms_for(std::size_t k) {
  std::size_t m = 0;
  while ((std::size_t{1} << m) < k + 2) ++m;
  return m;
}

/// No-gap witness family for a one-variable term: algebras H_k with
/// ds(t = top) < 1 and ds >= k / (2|H'| + k), H' the smallest countermodel.
///
/// Default recipe: H_k = (H' + |H'| chain) + k chain. The term i3 = ~~p -> p
/// fails on every dense element, so stacking a chain never helps it; for i3
/// the family is H_k = B_m + 1 with m = witness_atoms_for(k), where only the
/// old top of B_m fails.
inline WitnessFamily witness_family(const Term& t, std::size_t k_max) {
  const RnClass cls = rn_classify(t);
  const std::string name = cls.name();
  if (name == "top" || name == "i0" || name == "i1" || name == "d1" || name == "d2") {
    throw Error(ErrorKind::GapEquation, to_string(t) + " classifies as " + name + ", which has a finite gap");
  }
  const Equation eq{t, Term::top()};
  const HeytingAlgebra base = find_countermodel(t);
  const DsResult base_ds = ds_equation(base, eq);
  WitnessFamily fam;
  fam.rn = name;
  fam.base_size = base.size();

  const bool use_boolean = name == "i3";
  fam.recipe = use_boolean ? "boolean_algebra(ceil(log2(k+2))) + top" : "countermodel + |countermodel| chain + k chain";
  const HeytingAlgebra padded = adjoin_chain(base, base.size());
  const std::string var = free_variables(t).empty() ? "p" : free_variables(t)[0];

  for (std::size_t k = 0; k <= k_max; ++k) {
    WitnessMember m{k, use_boolean ? adjoin_chain(boolean_algebra(std::max<std::size_t>(1, witness_atoms_for(k))), 1)
                                   : adjoin_chain(padded, k),
                    {}, Rational(k, 2 * base.size() + k), false};
    m.ds = ds_equation(m.algebra, eq);
    if (use_boolean) {
      // The old top of B_m sits just below the new top.
      Element old_top = static_cast<Element>(m.algebra.size() - 2);
      m.failure_preserved = eval_term(m.algebra, t, {{var, old_top}}) != m.algebra.top();
    } else {
      // Old indices are kept by adjoin_chain, so the base's failing element
      // is the same index in every member.
      m.failure_preserved = !base_ds.witnesses_failing.empty();
      for (Element x = 0; x < base.size(); ++x) {
        bool fails_in_base = eval_term(base, t, {{var, x}}) != base.top();
        bool fails_here = eval_term(m.algebra, t, {{var, x}}) != m.algebra.top();
        if (fails_in_base && x != base.bot() && !fails_here) m.failure_preserved = false;
      }
    }
    fam.members.push_back(std::move(m));
  }
  return fam;
}

enum class Outcome { Gap, NeverSatisfiable, AlwaysSatisfied, NoGap };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Gap: return "gap";
    case Outcome::NeverSatisfiable: return "never_satisfiable";
    case Outcome::AlwaysSatisfied: return "always_satisfied";
    case Outcome::NoGap: return "no_gap";
  }
  return "?";
}

struct Classification {
  Outcome outcome;
  std::string rn;
  /// Gap size for Gap (1/2 or 1/3) and NeverSatisfiable (1).
  std::optional<Rational> epsilon;
};

/// Finite-gap classification of the one-variable equation t = top.
inline Classification classify_one_var(const Term& t, unsigned cap = 32) {
  const RnClass cls = rn_classify(t, cap);
  const std::string name = cls.name();
  if (name == "top") return {Outcome::AlwaysSatisfied, name, std::nullopt};
  if (name == "i0") return {Outcome::NeverSatisfiable, name, Rational(1)};
  if (name == "i1" || name == "d1") return {Outcome::Gap, name, Rational(1, 2)};
  if (name == "d2") return {Outcome::Gap, name, Rational(1, 3)};
  return {Outcome::NoGap, name, std::nullopt};
}

inline Classification classify_one_var(const Equation& eq, unsigned cap = 32) {
  return classify_one_var(normalize_system(eq).lhs, cap);
}

struct MaterialImplicationProfile {
  std::size_t n;
  HeytingAlgebra algebra;
  DsResult ds;
  Rational lower_bound;          // 1 - (3/4)^(n+1)
  BigInt materializer_total;     // sum over x of |M(x)|
  BigInt materializer_bound;     // |H|^2 - (1 + 2^n + 3^n)

  bool below_one() const { return ds.value < 1; }
  bool meets_lower_bound() const { return ds.value >= lower_bound; }
  bool materializer_bound_holds() const {
    return materializer_total >= materializer_bound && materializer_total == ds.satisfying_count;
  }
  bool holds() const { return below_one() && meets_lower_bound() && materializer_bound_holds(); }
};

/// ds(a -> b = ~a | b) on B_n + top against the bound 1 - (3/4)^(n+1).
inline MaterialImplicationProfile material_implication_profile(std::size_t n, unsigned jobs = 1) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
  HeytingAlgebra h = adjoin_chain(boolean_algebra(n), 1);
  MaterialImplicationProfile p{n, h, ds_equation(h, parse_equation("a -> b = ~a | b"), jobs),
                               Rational(1) - rational_pow(Rational(3, 4), static_cast<unsigned>(n + 1)), 0, 0};
  for (Element x = 0; x < h.size(); ++x) p.materializer_total += materializer(h, x).count();
  BigInt size = h.size();
  p.materializer_bound = size * size - (1 + (BigInt(1) << n) + boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(n)));
  return p;
}

}  // namespace heyting
