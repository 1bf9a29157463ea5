#pragma once

#include <string>
#include <utility>
#include <vector>

#include "heyting/enumeration.hpp"
#include "heyting/error.hpp"
#include "heyting/eval.hpp"
#include "heyting/ipc.hpp"
#include "heyting/term.hpp"

namespace heyting {

enum class RnKind { Disjunctive, Implicative };

struct RNFormula {
  RnKind kind;
  unsigned index;
  Term term;

  /// "d3", "i3"; index 0 is reported as "i0" for both kinds since d0 = i0.
  std::string name() const {
    if (index == 0) return "i0";
    return (kind == RnKind::Disjunctive ? "d" : "i") + std::to_string(index);
  }
};

/// d0 = i0 = bot, d1 = p, i1 = ~p, d(n+1) = i(n) | d(n), i(n+1) = i(n) -> d(n).
inline RNFormula rn_formula(RnKind kind, unsigned n, const std::string& var = "p") {
  Term d = Term::bot(), i = Term::bot();
  if (n >= 1) {
    d = Term::var(var);
    i = Term::neg(d);
  }
  for (unsigned k = 1; k < n; ++k) {
    Term next_d = Term::join(i, d);
    Term next_i = Term::imp(i, d);
    d = next_d;
    i = next_i;
  }
  return {kind, n, kind == RnKind::Disjunctive ? d : i};
}

/// An element of the free one-generated Heyting algebra.
struct RnClass {
  bool top = false;
  RNFormula formula{RnKind::Implicative, 0, Term::bot()};

  std::string name() const { return top ? "top" : formula.name(); }
  Term term() const { return top ? Term::top() : formula.term; }
};

/// Candidates in the order top, i0, d1, i1, d2, i2, ... up to the cap.
inline std::vector<RnClass> rn_candidates(unsigned cap, const std::string& var = "p") {
  std::vector<RnClass> out;
  out.push_back({true, {RnKind::Implicative, 0, Term::bot()}});
  out.push_back({false, rn_formula(RnKind::Implicative, 0, var)});
  for (unsigned n = 1; n <= cap; ++n) {
    out.push_back({false, rn_formula(RnKind::Disjunctive, n, var)});
    out.push_back({false, rn_formula(RnKind::Implicative, n, var)});
  }
  return out;
}

/// Covering pairs (lower, upper) of the lattice up to index `max_index`;
/// lower -> upper is an intuitionistic theorem for each.
inline std::vector<std::pair<RNFormula, RNFormula>> rn_hasse_edges(unsigned max_index) {
  auto d = [](unsigned n) { return rn_formula(RnKind::Disjunctive, n); };
  auto i = [](unsigned n) { return rn_formula(RnKind::Implicative, n); };
  std::vector<std::pair<RNFormula, RNFormula>> edges;
  if (max_index >= 1) {
    edges.emplace_back(i(0), i(1));
    edges.emplace_back(i(0), d(1));
  }
  for (unsigned n = 1; n < max_index; ++n) {
    edges.emplace_back(i(n), d(n + 1));
    edges.emplace_back(d(n), d(n + 1));
    edges.emplace_back(d(n), i(n + 1));
  }
  return edges;
}

namespace detail {

/// Value vectors of a one-variable term over every small algebra; unequal
/// signatures rule out intuitionistic equivalence.
inline std::vector<Element> rn_signature(const Term& t, const std::string& var) {
  static const auto algebras = enumerate_heyting(EnumerationBudget{6, 5});
  std::vector<Element> sig;
  std::map<std::string, std::size_t> slots{{var, 0}};
  CompiledTerm code(t, slots);
  std::vector<Element> scratch;
  for (const auto& e : algebras) {
    for (std::size_t x = 0; x < e.algebra.size(); ++x) {
      Element env[1] = {static_cast<Element>(x)};
      sig.push_back(code.eval(e.algebra, env, scratch));
    }
  }
  return sig;
}

}  // namespace detail

/// The Rieger-Nishimura element intuitionistically equivalent to t.
inline RnClass rn_classify(const Term& t, unsigned cap = 32) {
  auto vars = free_variables(t);
  if (vars.size() > 1) throw Error(ErrorKind::MultiVariable, "term has " + std::to_string(vars.size()) + " variables");
  const std::string var = vars.empty() ? "p" : vars[0];
  const auto sig = detail::rn_signature(t, var);
  IpcProver prover;
  for (const auto& c : rn_candidates(cap, var)) {
    if (detail::rn_signature(c.term(), var) != sig) continue;
    if (prover.proves({t}, c.term()) && prover.proves({c.term()}, t)) {
      RnClass out = c;
      if (!out.top) out.formula = rn_formula(out.formula.kind, out.formula.index);
      return out;
    }
  }
  throw Error(ErrorKind::ClassificationBudgetExceeded, "no Rieger-Nishimura element up to index " +
                                                           std::to_string(cap) + " is equivalent");
}

}  // namespace heyting
