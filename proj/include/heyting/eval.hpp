#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "heyting/algebra.hpp"
#include "heyting/formula.hpp"
#include "heyting/term.hpp"

namespace heyting {

/// A term flattened into straight-line code. Shared subterms are computed
/// once; variables read from caller-supplied slots.
class CompiledTerm {
 public:
  CompiledTerm() = default;

  /// `slot_of` maps each variable name to its index in the environment
  /// array passed to `eval`.
  CompiledTerm(const Term& t, const std::map<std::string, std::size_t>& slot_of) {
    std::unordered_map<const Term::Node*, std::uint32_t> reg;
    auto emit = [&](auto&& self, const Term& u) -> std::uint32_t {
      if (auto it = reg.find(u.id()); it != reg.end()) return it->second;
      Instr in{u.op(), 0, 0};
      if (u.op() == TermOp::Var) {
        auto s = slot_of.find(u.name());
        if (s == slot_of.end()) throw Error(ErrorKind::UnboundVariable, "variable '" + u.name() + "' is unbound");
        in.a = static_cast<std::uint32_t>(s->second);
      } else if (u.is_binary()) {
        in.a = self(self, u.lhs());
        in.b = self(self, u.rhs());
      }
      code_.push_back(in);
      auto r = static_cast<std::uint32_t>(code_.size() - 1);
      reg.emplace(u.id(), r);
      return r;
    };
    emit(emit, t);
  }

  /// `scratch` is resized as needed so callers can reuse it across calls.
  Element eval(const HeytingAlgebra& h, const Element* env, std::vector<Element>& scratch) const {
    scratch.resize(code_.size());
    for (std::size_t i = 0; i < code_.size(); ++i) {
      const Instr& in = code_[i];
      Element v = 0;
      switch (in.op) {
        case TermOp::Var: v = env[in.a]; break;
        case TermOp::Bot: v = h.bot(); break;
        case TermOp::Top: v = h.top(); break;
        case TermOp::Meet: v = h.meet(scratch[in.a], scratch[in.b]); break;
        case TermOp::Join: v = h.join(scratch[in.a], scratch[in.b]); break;
        case TermOp::Imp: v = h.imp(scratch[in.a], scratch[in.b]); break;
      }
      scratch[i] = v;
    }
    return scratch.back();
  }

  std::size_t length() const { return code_.size(); }

 private:
  struct Instr {
    TermOp op;
    std::uint32_t a, b;
  };
  std::vector<Instr> code_;
};

inline Element eval_term(const HeytingAlgebra& h, const Term& t, const std::map<std::string, Element>& env) {
  std::map<std::string, std::size_t> slots;
  std::vector<Element> values;
  for (const auto& [name, value] : env) {
    if (value >= h.size()) throw Error(ErrorKind::InvalidArgument, "element out of range for '" + name + "'");
    slots.emplace(name, values.size());
    values.push_back(value);
  }
  CompiledTerm code(t, slots);
  std::vector<Element> scratch;
  return code.eval(h, values.data(), scratch);
}

/// A formula with every variable occurrence resolved to an environment slot.
/// Free variables take slots 0..k-1 in the order given; each binder gets its
/// own slot after those.
class CompiledFormula {
 public:
  CompiledFormula(const Formula& f, const std::vector<std::string>& free_vars) {
    std::map<std::string, std::size_t> scope;
    for (std::size_t i = 0; i < free_vars.size(); ++i) scope[free_vars[i]] = i;
    slots_ = free_vars.size();
    root_ = build(f, scope);
  }

  std::size_t slot_count() const { return slots_; }

  /// `env` must have slot_count() entries; bound slots are overwritten.
  bool eval(const HeytingAlgebra& h, std::vector<Element>& env, std::vector<Element>& scratch) const {
    return run(h, root_, env, scratch);
  }

 private:
  struct Node {
    FormulaOp op;
    CompiledTerm lhs, rhs;
    std::size_t slot = 0;
    std::size_t a = 0, b = 0;
  };

  std::size_t build(const Formula& f, std::map<std::string, std::size_t>& scope) {
    Node n{f.op(), {}, {}, 0, 0, 0};
    switch (f.op()) {
      case FormulaOp::Atom:
        n.lhs = CompiledTerm(f.equation().lhs, scope);
        n.rhs = CompiledTerm(f.equation().rhs, scope);
        break;
      case FormulaOp::Not: n.a = build(f.lhs(), scope); break;
      case FormulaOp::And:
      case FormulaOp::Or:
      case FormulaOp::Implies:
        n.a = build(f.lhs(), scope);
        n.b = build(f.rhs(), scope);
        break;
      case FormulaOp::Forall:
      case FormulaOp::Exists: {
        n.slot = slots_++;
        auto saved = scope;
        scope[f.var()] = n.slot;
        n.a = build(f.body(), scope);
        scope = std::move(saved);
        break;
      }
    }
    nodes_.push_back(std::move(n));
    return nodes_.size() - 1;
  }

  bool run(const HeytingAlgebra& h, std::size_t i, std::vector<Element>& env, std::vector<Element>& scratch) const {
    const Node& n = nodes_[i];
    switch (n.op) {
      case FormulaOp::Atom: {
        Element l = n.lhs.eval(h, env.data(), scratch);
        return l == n.rhs.eval(h, env.data(), scratch);
      }
      case FormulaOp::Not: return !run(h, n.a, env, scratch);
      case FormulaOp::And: return run(h, n.a, env, scratch) && run(h, n.b, env, scratch);
      case FormulaOp::Or: return run(h, n.a, env, scratch) || run(h, n.b, env, scratch);
      case FormulaOp::Implies: return !run(h, n.a, env, scratch) || run(h, n.b, env, scratch);
      case FormulaOp::Forall:
        for (std::size_t x = 0; x < h.size(); ++x) {
          env[n.slot] = static_cast<Element>(x);
          if (!run(h, n.a, env, scratch)) return false;
        }
        return true;
      case FormulaOp::Exists:
        for (std::size_t x = 0; x < h.size(); ++x) {
          env[n.slot] = static_cast<Element>(x);
          if (run(h, n.a, env, scratch)) return true;
        }
        return false;
    }
    return false;
  }

  std::vector<Node> nodes_;
  std::size_t root_ = 0;
  std::size_t slots_ = 0;
};

/// Classical satisfaction, quantifiers ranging over the whole carrier.
inline bool eval_formula(const HeytingAlgebra& h, const Formula& f, const std::map<std::string, Element>& env) {
  std::vector<std::string> names;
  std::vector<Element> values;
  for (const auto& [name, value] : env) {
    if (value >= h.size()) throw Error(ErrorKind::InvalidArgument, "element out of range for '" + name + "'");
    names.push_back(name);
    values.push_back(value);
  }
  CompiledFormula code(f, names);
  values.resize(code.slot_count());
  std::vector<Element> scratch;
  return code.eval(h, values, scratch);
}

}  // namespace heyting
