#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "heyting/error.hpp"

namespace heyting {

enum class TermOp : std::uint8_t { Var, Bot, Top, Meet, Join, Imp };

/// Immutable term over <meet, join, ->, bot, top>. Negation is not a node:
/// ~t is stored as t -> bot. Subterms are shared, so large recursively
/// defined terms stay linear in memory.
class Term {
 public:
  struct Node {
    TermOp op;
    std::string name;  // only for Var
    std::shared_ptr<const Node> lhs, rhs;
  };

  Term() : node_(bot().node_) {}

  static Term var(std::string name) {
    return Term(std::make_shared<const Node>(Node{TermOp::Var, std::move(name), nullptr, nullptr}));
  }
  static Term bot() {
    static const auto node = std::make_shared<const Node>(Node{TermOp::Bot, {}, nullptr, nullptr});
    return Term(node);
  }
  static Term top() {
    static const auto node = std::make_shared<const Node>(Node{TermOp::Top, {}, nullptr, nullptr});
    return Term(node);
  }
  static Term meet(const Term& a, const Term& b) { return binary(TermOp::Meet, a, b); }
  static Term join(const Term& a, const Term& b) { return binary(TermOp::Join, a, b); }
  static Term imp(const Term& a, const Term& b) { return binary(TermOp::Imp, a, b); }
  static Term neg(const Term& a) { return imp(a, bot()); }

  TermOp op() const { return node_->op; }
  const std::string& name() const { return node_->name; }
  Term lhs() const { return Term(node_->lhs); }
  Term rhs() const { return Term(node_->rhs); }
  bool is_binary() const { return op() == TermOp::Meet || op() == TermOp::Join || op() == TermOp::Imp; }
  bool is_negation() const { return op() == TermOp::Imp && node_->rhs->op == TermOp::Bot; }

  /// Identity of the shared node; equal pointers imply equal terms.
  const Node* id() const { return node_.get(); }

  friend bool operator==(const Term& a, const Term& b) { return structurally_equal(a.node_.get(), b.node_.get()); }

 private:
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static Term binary(TermOp op, const Term& a, const Term& b) {
    return Term(std::make_shared<const Node>(Node{op, {}, a.node_, b.node_}));
  }

  static bool structurally_equal(const Node* a, const Node* b) {
    if (a == b) return true;
    if (a->op != b->op) return false;
    switch (a->op) {
      case TermOp::Var: return a->name == b->name;
      case TermOp::Bot:
      case TermOp::Top: return true;
      default:
        return structurally_equal(a->lhs.get(), b->lhs.get()) &&
               structurally_equal(a->rhs.get(), b->rhs.get());
    }
  }

  std::shared_ptr<const Node> node_;
};

/// An equation lhs = rhs.
struct Equation {
  Term lhs;
  Term rhs;

  friend bool operator==(const Equation&, const Equation&) = default;
};

namespace detail {

template <class F>
void visit_dag(const Term& t, std::set<const Term::Node*>& seen, F&& f) {
  if (!seen.insert(t.id()).second) return;
  if (t.is_binary()) {
    visit_dag(t.lhs(), seen, f);
    visit_dag(t.rhs(), seen, f);
  }
  f(t);
}

}  // namespace detail

/// Free variables in order of first appearance (left to right).
inline std::vector<std::string> free_variables(const Term& t) {
  std::vector<std::string> out;
  std::set<std::string> names;
  std::set<const Term::Node*> seen;
  auto walk = [&](auto&& self, const Term& u) -> void {
    if (!seen.insert(u.id()).second) return;
    if (u.op() == TermOp::Var) {
      if (names.insert(u.name()).second) out.push_back(u.name());
    } else if (u.is_binary()) {
      self(self, u.lhs());
      self(self, u.rhs());
    }
  };
  walk(walk, t);
  return out;
}

inline std::vector<std::string> free_variables(const Equation& e) {
  auto out = free_variables(e.lhs);
  for (auto& v : free_variables(e.rhs))
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

/// Replaces variables by terms, sharing rebuilt subterms.
inline Term substitute(const Term& t, const std::map<std::string, Term>& sigma) {
  std::map<const Term::Node*, Term> memo;
  auto walk = [&](auto&& self, const Term& u) -> Term {
    if (auto it = memo.find(u.id()); it != memo.end()) return it->second;
    Term out = u;
    switch (u.op()) {
      case TermOp::Var:
        if (auto s = sigma.find(u.name()); s != sigma.end()) out = s->second;
        break;
      case TermOp::Bot:
      case TermOp::Top: break;
      case TermOp::Meet: out = Term::meet(self(self, u.lhs()), self(self, u.rhs())); break;
      case TermOp::Join: out = Term::join(self(self, u.lhs()), self(self, u.rhs())); break;
      case TermOp::Imp: out = Term::imp(self(self, u.lhs()), self(self, u.rhs())); break;
    }
    memo.emplace(u.id(), out);
    return out;
  };
  return walk(walk, t);
}

/// Number of nodes counting shared subterms once.
inline std::size_t dag_size(const Term& t) {
  std::set<const Term::Node*> seen;
  std::size_t n = 0;
  detail::visit_dag(t, seen, [&](const Term&) { ++n; });
  return n;
}

enum class Notation { Ascii, Unicode };

/// Prints with the minimal parentheses for the grammar: ~ binds tightest,
/// then &, then |, then -> (right associative); & and | associate left.
inline std::string to_string(const Term& t, Notation notation = Notation::Ascii) {
  const bool uni = notation == Notation::Unicode;
  // Precedence levels: 4 atom/negation, 3 meet, 2 join, 1 implication.
  auto level = [](const Term& u) {
    if (u.is_negation()) return 4;
    switch (u.op()) {
      case TermOp::Meet: return 3;
      case TermOp::Join: return 2;
      case TermOp::Imp: return 1;
      default: return 4;
    }
  };
  auto print = [&](auto&& self, const Term& u) -> std::string {
    auto wrap = [&](const Term& sub, bool parens) {
      std::string s = self(self, sub);
      return parens ? "(" + s + ")" : s;
    };
    if (u.is_negation()) return std::string(uni ? "¬" : "~") + wrap(u.lhs(), level(u.lhs()) < 4);
    switch (u.op()) {
      case TermOp::Var: return u.name();
      case TermOp::Bot: return uni ? "⊥" : "bot";
      case TermOp::Top: return uni ? "⊤" : "top";
      case TermOp::Meet:
        return wrap(u.lhs(), level(u.lhs()) < 3) + (uni ? " ∧ " : " & ") + wrap(u.rhs(), level(u.rhs()) <= 3);
      case TermOp::Join:
        return wrap(u.lhs(), level(u.lhs()) < 2) + (uni ? " ∨ " : " | ") + wrap(u.rhs(), level(u.rhs()) <= 2);
      case TermOp::Imp:
        return wrap(u.lhs(), level(u.lhs()) <= 1) + (uni ? " → " : " -> ") + wrap(u.rhs(), level(u.rhs()) < 1);
    }
    return {};
  };
  return print(print, t);
}

inline std::string to_string(const Equation& e, Notation notation = Notation::Ascii) {
  return to_string(e.lhs, notation) + " = " + to_string(e.rhs, notation);
}

}  // namespace heyting
