#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "heyting/term.hpp"

namespace heyting {

enum class FormulaOp : std::uint8_t { Atom, And, Or, Not, Implies, Forall, Exists };

/// First-order formula in the language of Heyting algebras: equations
/// combined with classical connectives and quantifiers over the carrier.
class Formula {
 public:
  struct Node {
    FormulaOp op;
    Equation atom;      // Atom
    std::string var;    // Forall / Exists
    std::shared_ptr<const Node> lhs, rhs;
  };

  static Formula atom(Equation e) { return make({FormulaOp::Atom, std::move(e), {}, nullptr, nullptr}); }
  static Formula conj(const Formula& a, const Formula& b) { return make({FormulaOp::And, {}, {}, a.node_, b.node_}); }
  static Formula disj(const Formula& a, const Formula& b) { return make({FormulaOp::Or, {}, {}, a.node_, b.node_}); }
  static Formula implies(const Formula& a, const Formula& b) {
    return make({FormulaOp::Implies, {}, {}, a.node_, b.node_});
  }
  static Formula negation(const Formula& a) { return make({FormulaOp::Not, {}, {}, a.node_, nullptr}); }
  static Formula forall(std::string v, const Formula& body) {
    return make({FormulaOp::Forall, {}, std::move(v), body.node_, nullptr});
  }
  static Formula exists(std::string v, const Formula& body) {
    return make({FormulaOp::Exists, {}, std::move(v), body.node_, nullptr});
  }

  FormulaOp op() const { return node_->op; }
  const Equation& equation() const { return node_->atom; }
  const std::string& var() const { return node_->var; }
  Formula lhs() const { return Formula(node_->lhs); }
  Formula rhs() const { return Formula(node_->rhs); }
  Formula body() const { return Formula(node_->lhs); }

 private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Node n) { return Formula(std::make_shared<const Node>(std::move(n))); }

  std::shared_ptr<const Node> node_;
};

/// Free variables in order of first appearance; a formula with none is a
/// sentence.
inline std::vector<std::string> free_variables(const Formula& f) {
  std::vector<std::string> out;
  auto add = [&](const std::string& v, const std::vector<std::string>& bound) {
    if (std::find(bound.begin(), bound.end(), v) != bound.end()) return;
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  auto walk = [&](auto&& self, const Formula& g, std::vector<std::string>& bound) -> void {
    switch (g.op()) {
      case FormulaOp::Atom:
        for (const auto& v : free_variables(g.equation())) add(v, bound);
        break;
      case FormulaOp::Not: self(self, g.lhs(), bound); break;
      case FormulaOp::And:
      case FormulaOp::Or:
      case FormulaOp::Implies:
        self(self, g.lhs(), bound);
        self(self, g.rhs(), bound);
        break;
      case FormulaOp::Forall:
      case FormulaOp::Exists:
        bound.push_back(g.var());
        self(self, g.body(), bound);
        bound.pop_back();
        break;
    }
  };
  std::vector<std::string> bound;
  walk(walk, f, bound);
  return out;
}

inline bool is_sentence(const Formula& f) { return free_variables(f).empty(); }

inline std::string to_string(const Formula& f) {
  auto print = [&](auto&& self, const Formula& g) -> std::string {
    auto sub = [&](const Formula& h) {
      return h.op() == FormulaOp::Atom || h.op() == FormulaOp::Not ? self(self, h) : "(" + self(self, h) + ")";
    };
    switch (g.op()) {
      case FormulaOp::Atom: return "(" + to_string(g.equation()) + ")";
      case FormulaOp::Not: return "not " + sub(g.lhs());
      case FormulaOp::And: return sub(g.lhs()) + " and " + sub(g.rhs());
      case FormulaOp::Or: return sub(g.lhs()) + " or " + sub(g.rhs());
      case FormulaOp::Implies: return sub(g.lhs()) + " => " + sub(g.rhs());
      case FormulaOp::Forall: return "forall " + g.var() + ". " + self(self, g.body());
      case FormulaOp::Exists: return "exists " + g.var() + ". " + self(self, g.body());
    }
    return {};
  };
  return print(print, f);
}

}  // namespace heyting
