#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "heyting/error.hpp"

namespace heyting {

/// Index of an element inside its algebra. Index 0 is always the bottom and
/// index size()-1 the top; the stored order is a linear extension of the
/// lattice order.
using Element = std::uint16_t;

/// A set of elements of one algebra, as a bit vector indexed by Element.
using ElementSet = boost::dynamic_bitset<>;

/// Largest carrier any constructor will build. Operation tables are dense
/// size*size arrays, so this bounds memory at a few tens of megabytes.
inline constexpr std::size_t kMaxAlgebraSize = 2048;

/// A finite partial order given by its full relation matrix.
class Poset {
 public:
  Poset() = default;

  explicit Poset(std::size_t size) : size_(size), leq_(size * size, 0) {
    for (std::size_t i = 0; i < size; ++i) leq_[i * size + i] = 1;
  }

  Poset(std::size_t size, std::vector<std::uint8_t> matrix) : size_(size), leq_(std::move(matrix)) {
    if (leq_.size() != size * size) {
      throw Error(ErrorKind::NotAPoset, "relation matrix is not square");
    }
  }

  static Poset from_rows(const std::vector<std::vector<bool>>& rows) {
    const std::size_t n = rows.size();
    std::vector<std::uint8_t> m(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) throw Error(ErrorKind::NotAPoset, "relation matrix is not square");
      for (std::size_t j = 0; j < n; ++j) m[i * n + j] = rows[i][j] ? 1 : 0;
    }
    return Poset(n, std::move(m));
  }

  std::size_t size() const noexcept { return size_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size_ + b] != 0; }
  void set_leq(std::size_t a, std::size_t b, bool v) { leq_[a * size_ + b] = v ? 1 : 0; }
  const std::vector<std::uint8_t>& matrix() const noexcept { return leq_; }

  /// Empty when reflexive, antisymmetric and transitive; otherwise a
  /// description of the first violation found.
  std::optional<std::string> violation() const {
    const std::size_t n = size_;
    for (std::size_t a = 0; a < n; ++a) {
      if (!leq(a, a)) return "not reflexive at " + std::to_string(a);
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b && leq(a, b) && leq(b, a)) {
          return "not antisymmetric at (" + std::to_string(a) + "," + std::to_string(b) + ")";
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!leq(a, b)) continue;
        for (std::size_t c = 0; c < n; ++c) {
          if (leq(b, c) && !leq(a, c)) {
            return "not transitive at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                   std::to_string(c) + ")";
          }
        }
      }
    }
    return std::nullopt;
  }

  /// A linear extension as a permutation: result[k] is the original index
  /// placed at position k. Ties are broken by smallest original index, so an
  /// order that is already a linear extension maps to the identity.
  std::vector<std::size_t> linear_extension() const {
    const std::size_t n = size_;
    std::vector<std::size_t> indegree(n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (a != b && leq(a, b)) ++indegree[b];
    std::vector<std::size_t> order;
    std::vector<bool> placed(n, false);
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t pick = n;
      for (std::size_t a = 0; a < n; ++a) {
        if (!placed[a] && indegree[a] == 0) {
          pick = a;
          break;
        }
      }
      if (pick == n) throw Error(ErrorKind::NotAPoset, "relation has a cycle");
      placed[pick] = true;
      order.push_back(pick);
      for (std::size_t b = 0; b < n; ++b)
        if (b != pick && leq(pick, b)) --indegree[b];
    }
    return order;
  }

  Poset permuted(const std::vector<std::size_t>& order) const {
    Poset out(size_);
    for (std::size_t i = 0; i < size_; ++i)
      for (std::size_t j = 0; j < size_; ++j) out.set_leq(i, j, leq(order[i], order[j]));
    return out;
  }

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint8_t> leq_;
};

/// A finite Heyting algebra with every operation tabulated. Immutable once
/// built, so instances can be shared freely between threads.
class HeytingAlgebra {
 public:
  using Table = std::vector<Element>;

  HeytingAlgebra() = default;

  std::size_t size() const noexcept { return n_; }
  Element bot() const noexcept { return 0; }
  Element top() const noexcept { return static_cast<Element>(n_ - 1); }

  bool leq(Element a, Element b) const { return poset_.leq(a, b); }
  Element meet(Element a, Element b) const { return meet_[a * n_ + b]; }
  Element join(Element a, Element b) const { return join_[a * n_ + b]; }
  Element imp(Element a, Element b) const { return imp_[a * n_ + b]; }
  Element neg(Element a) const { return neg_[a]; }

  const Poset& poset() const noexcept { return poset_; }

  ElementSet empty_set() const { return ElementSet(n_); }
  ElementSet full_set() const { return ElementSet(n_).set(); }

  /// Builds an algebra from precomputed tables without re-checking the axioms.
  /// Constructors with closed-form operations use this; `check_axioms` is the
  /// way to audit the result.
  static HeytingAlgebra from_tables(Poset order, Table meet, Table join, Table imp) {
    HeytingAlgebra h;
    h.n_ = order.size();
    if (h.n_ < 2) throw Error(ErrorKind::Degenerate, "a Heyting algebra needs bottom != top");
    if (h.n_ > kMaxAlgebraSize) {
      throw Error(ErrorKind::BudgetExceeded,
                  "algebra of size " + std::to_string(h.n_) + " exceeds " +
                      std::to_string(kMaxAlgebraSize));
    }
    h.poset_ = std::move(order);
    h.meet_ = std::move(meet);
    h.join_ = std::move(join);
    h.imp_ = std::move(imp);
    h.neg_.resize(h.n_);
    for (std::size_t a = 0; a < h.n_; ++a) h.neg_[a] = h.imp_[a * h.n_];
    return h;
  }

  friend bool operator==(const HeytingAlgebra& a, const HeytingAlgebra& b) {
    return a.poset_ == b.poset_;
  }

 private:
  std::size_t n_ = 0;
  Poset poset_;
  Table meet_, join_, imp_;
  Table neg_;
};

/// Validates `order` and builds the Heyting algebra it describes. Elements
/// are relabelled into a linear extension (bottom first, top last); when the
/// input is already such an order the labels are kept.
inline HeytingAlgebra heyting_from_leq(const Poset& input) {
  const std::size_t n = input.size();
  if (n == 0) throw Error(ErrorKind::NotAPoset, "empty relation");
  if (auto v = input.violation()) throw Error(ErrorKind::NotAPoset, *v);
  if (n == 1) throw Error(ErrorKind::Degenerate, "one-element lattice has bottom == top");
  if (n > kMaxAlgebraSize) throw Error(ErrorKind::BudgetExceeded, "algebra too large");

  const Poset order = input.permuted(input.linear_extension());
  HeytingAlgebra::Table meet(n * n), join(n * n), imp(n * n);

  // In a linear extension the infimum, if it exists, is the lower bound with
  // the largest index; dually for the supremum.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t inf = n, sup = n;
      for (std::size_t c = n; c-- > 0;) {
        if (order.leq(c, a) && order.leq(c, b)) {
          inf = c;
          break;
        }
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (order.leq(a, c) && order.leq(b, c)) {
          sup = c;
          break;
        }
      }
      if (inf == n || sup == n) {
        throw Error(ErrorKind::NotALattice,
                    "pair (" + std::to_string(a) + "," + std::to_string(b) + ") lacks a bound");
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (order.leq(c, a) && order.leq(c, b) && !order.leq(c, inf)) {
          throw Error(ErrorKind::NotALattice, "pair (" + std::to_string(a) + "," +
                                                  std::to_string(b) + ") has no infimum");
        }
        if (order.leq(a, c) && order.leq(b, c) && !order.leq(sup, c)) {
          throw Error(ErrorKind::NotALattice, "pair (" + std::to_string(a) + "," +
                                                  std::to_string(b) + ") has no supremum");
        }
      }
      meet[a * n + b] = static_cast<Element>(inf);
      join[a * n + b] = static_cast<Element>(sup);
    }
  }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (meet[x * n + join[y * n + z]] != join[meet[x * n + y] * n + meet[x * n + z]]) {
          throw Error(ErrorKind::NotDistributive,
                      "x^(y v z) != (x^y) v (x^z) at (" + std::to_string(x) + "," +
                          std::to_string(y) + "," + std::to_string(z) + ")");
        }
      }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t best = n;
      for (std::size_t c = n; c-- > 0;) {
        if (order.leq(meet[a * n + c], b)) {
          best = c;
          break;
        }
      }
      for (std::size_t c = 0; c < n && best != n; ++c) {
        if (order.leq(meet[a * n + c], b) && !order.leq(c, best)) best = n;
      }
      if (best == n) {
        throw Error(ErrorKind::NoImplication,
                    "no maximum c with a^c <= b for (" + std::to_string(a) + "," +
                        std::to_string(b) + ")");
      }
      imp[a * n + b] = static_cast<Element>(best);
    }
  }
  return HeytingAlgebra::from_tables(order, std::move(meet), std::move(join), std::move(imp));
}

/// Full O(n^3) audit of the Heyting axioms against the stored tables.
/// Returns a description of the first failure, or nothing when all hold.
inline std::optional<std::string> check_axioms(const HeytingAlgebra& h) {
  const std::size_t n = h.size();
  if (n < 2) return "degenerate";
  if (auto v = h.poset().violation()) return *v;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (h.leq(static_cast<Element>(j), static_cast<Element>(i))) return "order is not a linear extension";
  for (Element a = 0; a < n; ++a) {
    if (!h.leq(h.bot(), a) || !h.leq(a, h.top())) return "bottom/top are not extremal";
    for (Element b = 0; b < n; ++b) {
      const Element m = h.meet(a, b), j = h.join(a, b);
      if (!h.leq(m, a) || !h.leq(m, b) || !h.leq(a, j) || !h.leq(b, j)) return "meet/join not bounds";
      for (Element c = 0; c < n; ++c) {
        if (h.leq(c, a) && h.leq(c, b) && !h.leq(c, m)) return "meet is not the infimum";
        if (h.leq(a, c) && h.leq(b, c) && !h.leq(j, c)) return "join is not the supremum";
        if (h.meet(a, h.join(b, c)) != h.join(h.meet(a, b), h.meet(a, c))) return "not distributive";
        if (h.leq(h.meet(a, c), b) != h.leq(c, h.imp(a, b))) return "adjunction fails";
      }
    }
    if (h.neg(a) != h.imp(a, h.bot())) return "negation table mismatch";
  }
  return std::nullopt;
}

}  // namespace heyting
