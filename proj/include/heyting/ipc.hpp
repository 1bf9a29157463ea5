#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "heyting/error.hpp"
#include "heyting/term.hpp"

namespace heyting {

struct IpcOptions {
  /// Refute sequents that already fail classically. Sound because every
  /// intuitionistic theorem is a classical one; only used while the
  /// problem has at most 6 distinct variables.
  bool classical_pruning = true;
  std::size_t max_sequents = 20'000'000;
};

/// Decision procedure for intuitionistic propositional logic: Dyckhoff's
/// contraction-free sequent calculus with set contexts and memoization.
/// Not thread-safe; use one prover per thread.
class IpcProver {
 public:
  explicit IpcProver(IpcOptions options = {}) : options_(options) {}

  bool proves(const Term& t) { return proves({}, t); }

  bool proves(const std::vector<Term>& hypotheses, const Term& goal) {
    std::vector<int> ctx;
    for (const auto& h : hypotheses) ctx.push_back(intern_root(h));
    int g = intern_root(goal);
    std::sort(ctx.begin(), ctx.end());
    ctx.erase(std::unique(ctx.begin(), ctx.end()), ctx.end());
    return prove(ctx, g);
  }

  std::size_t sequents_explored() const { return explored_; }

 private:
  enum class K : std::uint8_t { Atom, Bot, Top, And, Or, Imp };
  struct N {
    K k;
    int a, b;
  };

  int node(K k, int a, int b) {
    std::uint64_t key = (static_cast<std::uint64_t>(k) << 58) ^ (static_cast<std::uint64_t>(a) << 29) ^
                        static_cast<std::uint64_t>(b);
    auto [it, fresh] = index_.emplace(key, static_cast<int>(nodes_.size()));
    if (fresh) {
      nodes_.push_back({k, a, b});
      truth_.push_back(0);
      truth_known_.push_back(false);
    }
    return it->second;
  }

  // The node cache is keyed by address, so interned terms must stay alive.
  int intern_root(const Term& t) {
    alive_.push_back(t);
    return intern(t);
  }

  int intern(const Term& t) {
    if (auto it = term_memo_.find(t.id()); it != term_memo_.end()) return it->second;
    int id = 0;
    switch (t.op()) {
      case TermOp::Var: {
        auto [v, fresh] = var_index_.emplace(t.name(), static_cast<int>(var_index_.size()));
        (void)fresh;
        id = node(K::Atom, v->second, 0);
        break;
      }
      case TermOp::Bot: id = node(K::Bot, 0, 0); break;
      case TermOp::Top: id = node(K::Top, 0, 0); break;
      case TermOp::Meet: id = node(K::And, intern(t.lhs()), intern(t.rhs())); break;
      case TermOp::Join: id = node(K::Or, intern(t.lhs()), intern(t.rhs())); break;
      case TermOp::Imp: id = node(K::Imp, intern(t.lhs()), intern(t.rhs())); break;
    }
    term_memo_.emplace(t.id(), id);
    return id;
  }

  // Truth table over the first 6 variables, one bit per assignment.
  std::uint64_t truth(int f) {
    if (truth_known_[f]) return truth_[f];
    const N n = nodes_[f];
    std::uint64_t v = 0;
    switch (n.k) {
      case K::Atom: {
        static const std::uint64_t patterns[6] = {0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull,
                                                  0xF0F0F0F0F0F0F0F0ull, 0xFF00FF00FF00FF00ull,
                                                  0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
        v = patterns[n.a];
        break;
      }
      case K::Bot: v = 0; break;
      case K::Top: v = ~0ull; break;
      case K::And: v = truth(n.a) & truth(n.b); break;
      case K::Or: v = truth(n.a) | truth(n.b); break;
      case K::Imp: v = ~truth(n.a) | truth(n.b); break;
    }
    truth_[f] = v;
    truth_known_[f] = true;
    return v;
  }

  bool classically_valid(const std::vector<int>& ctx, int goal) {
    std::uint64_t v = truth(goal);
    for (int f : ctx) v |= ~truth(f);
    return v == ~0ull;
  }

  static std::vector<int> with(std::vector<int> ctx, int f) {
    auto it = std::lower_bound(ctx.begin(), ctx.end(), f);
    if (it == ctx.end() || *it != f) ctx.insert(it, f);
    return ctx;
  }
  static std::vector<int> without(std::vector<int> ctx, int f) {
    ctx.erase(std::lower_bound(ctx.begin(), ctx.end(), f));
    return ctx;
  }

  /// Applies the invertible left rules to a fixpoint. Returns false when
  /// bottom is derived (the sequent is then an axiom).
  bool saturate(const std::vector<int>& input, std::vector<int>& out) {
    std::set<int> settled;
    std::set<int> atoms;
    std::vector<int> work(input.rbegin(), input.rend());
    while (!work.empty()) {
      int f = work.back();
      work.pop_back();
      if (settled.count(f)) continue;
      const N n = nodes_[f];
      switch (n.k) {
        case K::Bot: return false;
        case K::Top: break;
        case K::And:
          work.push_back(n.a);
          work.push_back(n.b);
          break;
        case K::Atom: {
          settled.insert(f);
          atoms.insert(f);
          for (auto it = settled.begin(); it != settled.end();) {
            const N g = nodes_[*it];
            if (g.k == K::Imp && g.a == f) {
              work.push_back(g.b);
              it = settled.erase(it);
            } else {
              ++it;
            }
          }
          break;
        }
        case K::Or: settled.insert(f); break;
        case K::Imp: {
          const N a = nodes_[n.a];
          switch (a.k) {
            case K::Bot: break;
            case K::Top: work.push_back(n.b); break;
            case K::Atom:
              if (atoms.count(n.a)) work.push_back(n.b);
              else settled.insert(f);
              break;
            case K::And: work.push_back(node(K::Imp, a.a, node(K::Imp, a.b, n.b))); break;
            case K::Or:
              work.push_back(node(K::Imp, a.a, n.b));
              work.push_back(node(K::Imp, a.b, n.b));
              break;
            case K::Imp: settled.insert(f); break;
          }
          break;
        }
      }
    }
    out.assign(settled.begin(), settled.end());
    return true;
  }

  bool prove(const std::vector<int>& input, int goal) {
    std::vector<int> key = input;
    key.push_back(goal);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = search(input, goal);
    memo_.emplace(std::move(key), result);
    return result;
  }

  bool search(const std::vector<int>& input, int goal) {
    if (++explored_ > options_.max_sequents) {
      throw Error(ErrorKind::BudgetExceeded, "proof search exceeded " + std::to_string(options_.max_sequents) +
                                                 " sequents");
    }
    std::vector<int> ctx;
    if (!saturate(input, ctx)) return true;
    const N g = nodes_[goal];
    if (g.k == K::Top || std::binary_search(ctx.begin(), ctx.end(), goal)) return true;
    if (options_.classical_pruning && var_index_.size() <= 6 && !classically_valid(ctx, goal)) return false;

    // Invertible right rules.
    if (g.k == K::And) return prove(ctx, g.a) && prove(ctx, g.b);
    if (g.k == K::Imp) return prove(with(ctx, g.a), g.b);

    // Invertible left disjunction.
    for (int f : ctx) {
      const N n = nodes_[f];
      if (n.k == K::Or) {
        auto rest = without(ctx, f);
        return prove(with(rest, n.a), goal) && prove(with(rest, n.b), goal);
      }
    }

    // Non-invertible choices.
    if (g.k == K::Or && (prove(ctx, g.a) || prove(ctx, g.b))) return true;
    for (int f : ctx) {
      const N n = nodes_[f];
      if (n.k != K::Imp || nodes_[n.a].k != K::Imp) continue;
      const N cd = nodes_[n.a];
      auto rest = without(ctx, f);
      if (prove(with(rest, node(K::Imp, cd.b, n.b)), n.a) && prove(with(rest, n.b), goal)) return true;
    }
    return false;
  }

  IpcOptions options_;
  std::vector<N> nodes_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<std::uint64_t> truth_;
  std::vector<bool> truth_known_;
  std::unordered_map<const Term::Node*, int> term_memo_;
  std::vector<Term> alive_;
  std::map<std::string, int> var_index_;
  std::map<std::vector<int>, bool> memo_;
  std::size_t explored_ = 0;
};

/// True iff t is a theorem of intuitionistic propositional logic.
inline bool ipc_proves(const Term& t, IpcOptions options = {}) { return IpcProver(options).proves(t); }

/// Both implications provable.
inline bool ipc_equivalent(const Term& a, const Term& b, IpcOptions options = {}) {
  IpcProver prover(options);
  return prover.proves({a}, b) && prover.proves({b}, a);
}

}  // namespace heyting
