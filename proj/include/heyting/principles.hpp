#pragma once

#include <map>
#include <string>
#include <vector>

#include "heyting/error.hpp"
#include "heyting/ipc.hpp"
#include "heyting/parser.hpp"
#include "heyting/term.hpp"

namespace heyting {

/// Single equation phi = top with the same solutions as the whole system.
inline Equation normalize_system(const std::vector<Equation>& eqs) {
  if (eqs.empty()) throw Error(ErrorKind::InvalidArgument, "empty equation system");
  auto as_term = [](const Equation& e) {
    if (e.rhs.op() == TermOp::Top) return e.lhs;
    if (e.lhs.op() == TermOp::Top) return e.rhs;
    return Term::meet(Term::imp(e.lhs, e.rhs), Term::imp(e.rhs, e.lhs));
  };
  Term phi = as_term(eqs[0]);
  for (std::size_t i = 1; i < eqs.size(); ++i) phi = Term::meet(phi, as_term(eqs[i]));
  return {phi, Term::top()};
}

inline Equation normalize_system(const Equation& e) { return normalize_system(std::vector<Equation>{e}); }

struct Principle {
  std::string name;
  Equation equation;
  Equation normalized;
};

inline const std::vector<Principle>& classical_principles() {
  static const std::vector<Principle> catalog = [] {
    const std::pair<const char*, const char*> sources[] = {
        {"lem", "x | ~x = top"},
        {"dne", "~~x = x"},
        {"peirce", "(x -> y) -> x = x"},
        {"contrapositive", "~y -> ~x = x -> y"},
        {"lem_eliminator", "(~x -> y) -> (x -> y) -> y = top"},
        {"material_implication", "x -> y = ~x | y"},
    };
    std::vector<Principle> out;
    for (const auto& [name, src] : sources) {
      Equation e = parse_equation(src);
      out.push_back({name, e, normalize_system(e)});
    }
    return out;
  }();
  return catalog;
}

inline const Principle& classical_principle(const std::string& name) {
  for (const auto& p : classical_principles())
    if (p.name == name) return p;
  throw Error(ErrorKind::InvalidArgument, "unknown principle '" + name + "'");
}

/// Searches {top, p, bot}^vars for a substitution whose instance of f
/// intuitionistically implies ~~p -> p.
inline std::map<std::string, Term> yankov_reduce(const Term& f, const std::vector<std::string>& vars) {
  auto used = free_variables(f);
  std::string p = "p";
  for (int k = 1; std::find(used.begin(), used.end(), p) != used.end(); ++k) p = "p" + std::to_string(k);
  const Term pv = Term::var(p);
  const Term target = Term::imp(Term::neg(Term::neg(pv)), pv);
  const Term choices[3] = {Term::top(), pv, Term::bot()};

  IpcProver prover;
  std::vector<int> digit(vars.size(), 0);
  while (true) {
    std::map<std::string, Term> sigma;
    for (std::size_t i = 0; i < vars.size(); ++i) sigma.emplace(vars[i], choices[digit[i]]);
    if (prover.proves({substitute(f, sigma)}, target)) return sigma;
    std::size_t i = vars.size();
    while (i > 0 && digit[i - 1] == 2) digit[--i] = 0;
    if (i == 0) break;
    ++digit[i - 1];
  }
  throw Error(ErrorKind::NoSubstitutionFound, "no substitution into {top, p, bot} implies ~~p -> p");
}

}  // namespace heyting
