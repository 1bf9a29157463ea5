#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "heyting/algebra.hpp"

namespace heyting {

/// The n-element chain 0 < 1 < ... < n-1.
inline HeytingAlgebra chain(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::Degenerate, "chain needs at least two elements");
  if (n > kMaxAlgebraSize) throw Error(ErrorKind::BudgetExceeded, "chain too long");
  Poset order(n);
  HeytingAlgebra::Table meet(n * n), join(n * n), imp(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      order.set_leq(a, b, a <= b);
      meet[a * n + b] = static_cast<Element>(std::min(a, b));
      join[a * n + b] = static_cast<Element>(std::max(a, b));
      imp[a * n + b] = static_cast<Element>(a <= b ? n - 1 : b);
    }
  }
  return HeytingAlgebra::from_tables(std::move(order), std::move(meet), std::move(join), std::move(imp));
}

/// The powerset algebra on `atoms` atoms. Element i is the subset whose
/// characteristic bitmask is i.
inline HeytingAlgebra boolean_algebra(std::size_t atoms) {
  if (atoms == 0) throw Error(ErrorKind::Degenerate, "the powerset of the empty set has one element");
  if (atoms >= 16 || (std::size_t{1} << atoms) > kMaxAlgebraSize) {
    throw Error(ErrorKind::BudgetExceeded, "2^" + std::to_string(atoms) + " elements exceed the budget");
  }
  const std::size_t n = std::size_t{1} << atoms;
  const std::size_t mask = n - 1;
  Poset order(n);
  HeytingAlgebra::Table meet(n * n), join(n * n), imp(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      order.set_leq(a, b, (a & ~b) == 0);
      meet[a * n + b] = static_cast<Element>(a & b);
      join[a * n + b] = static_cast<Element>(a | b);
      imp[a * n + b] = static_cast<Element>((~a | b) & mask);
    }
  }
  return HeytingAlgebra::from_tables(std::move(order), std::move(meet), std::move(join), std::move(imp));
}

/// Componentwise product; the pair (i, j) lives at index i*|J| + j, which
/// keeps the stored order a linear extension.
inline HeytingAlgebra product(const HeytingAlgebra& h, const HeytingAlgebra& j) {
  const std::size_t nh = h.size(), nj = j.size(), n = nh * nj;
  if (n > kMaxAlgebraSize) throw Error(ErrorKind::BudgetExceeded, "product too large");
  Poset order(n);
  HeytingAlgebra::Table meet(n * n), join(n * n), imp(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto a1 = static_cast<Element>(a / nj), a2 = static_cast<Element>(a % nj);
    for (std::size_t b = 0; b < n; ++b) {
      const auto b1 = static_cast<Element>(b / nj), b2 = static_cast<Element>(b % nj);
      order.set_leq(a, b, h.leq(a1, b1) && j.leq(a2, b2));
      meet[a * n + b] = static_cast<Element>(h.meet(a1, b1) * nj + j.meet(a2, b2));
      join[a * n + b] = static_cast<Element>(h.join(a1, b1) * nj + j.join(a2, b2));
      imp[a * n + b] = static_cast<Element>(h.imp(a1, b1) * nj + j.imp(a2, b2));
    }
  }
  return HeytingAlgebra::from_tables(std::move(order), std::move(meet), std::move(join), std::move(imp));
}

/// H with a k-element chain stacked above its top. The elements of H keep
/// their indices; the new ones follow in increasing order.
inline HeytingAlgebra adjoin_chain(const HeytingAlgebra& h, std::size_t k) {
  if (k == 0) return h;
  const std::size_t old = h.size(), n = old + k;
  if (n > kMaxAlgebraSize) throw Error(ErrorKind::BudgetExceeded, "adjoined chain too long");
  const auto top = static_cast<Element>(n - 1);
  Poset order(n);
  HeytingAlgebra::Table meet(n * n), join(n * n), imp(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const bool a_old = a < old, b_old = b < old;
      const auto ea = static_cast<Element>(a), eb = static_cast<Element>(b);
      bool le;
      if (a_old && b_old) {
        le = h.leq(ea, eb);
        meet[a * n + b] = h.meet(ea, eb);
        join[a * n + b] = h.join(ea, eb);
        imp[a * n + b] = le ? top : h.imp(ea, eb);
      } else {
        // At least one element sits in the new chain, which is above all of H.
        le = a_old || (!b_old && a <= b);
        meet[a * n + b] = le ? ea : eb;
        join[a * n + b] = le ? eb : ea;
        imp[a * n + b] = le ? top : eb;
      }
      order.set_leq(a, b, le);
    }
  }
  return HeytingAlgebra::from_tables(std::move(order), std::move(meet), std::move(join), std::move(imp));
}

/// All downward-closed subsets of `p` as bitmasks, sorted by (size, mask).
inline std::vector<std::uint64_t> downsets(const Poset& p, std::size_t limit = kMaxAlgebraSize) {
  const std::size_t m = p.size();
  if (m > 63) throw Error(ErrorKind::BudgetExceeded, "poset too large for downset enumeration");
  std::vector<std::uint64_t> below(m, 0);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      if (y != x && p.leq(y, x)) below[x] |= std::uint64_t{1} << y;
  const auto order = p.linear_extension();
  std::vector<std::uint64_t> out;
  auto walk = [&](auto&& self, std::size_t pos, std::uint64_t current) -> void {
    if (pos == m) {
      out.push_back(current);
      if (out.size() > limit) {
        throw Error(ErrorKind::BudgetExceeded,
                    "more than " + std::to_string(limit) + " downsets");
      }
      return;
    }
    const std::size_t x = order[pos];
    self(self, pos + 1, current);
    if ((below[x] & ~current) == 0) self(self, pos + 1, current | (std::uint64_t{1} << x));
  };
  walk(walk, 0, 0);
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

/// The lattice of downsets of `p` ordered by inclusion. Implication is
/// a -> b = { x : downset(x) & a is contained in b }.
inline HeytingAlgebra downset_lattice(const Poset& p) {
  if (auto v = p.violation()) throw Error(ErrorKind::NotAPoset, *v);
  const auto sets = downsets(p);
  const std::size_t n = sets.size(), m = p.size();
  if (n < 2) throw Error(ErrorKind::Degenerate, "empty poset gives the one-element lattice");
  std::unordered_map<std::uint64_t, Element> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(sets[i], static_cast<Element>(i));
  std::vector<std::uint64_t> principal(m, 0);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      if (p.leq(y, x)) principal[x] |= std::uint64_t{1} << y;

  Poset order(n);
  HeytingAlgebra::Table meet(n * n), join(n * n), imp(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::uint64_t sa = sets[a], sb = sets[b];
      order.set_leq(a, b, (sa & ~sb) == 0);
      meet[a * n + b] = index.at(sa & sb);
      join[a * n + b] = index.at(sa | sb);
      std::uint64_t r = 0;
      for (std::size_t x = 0; x < m; ++x)
        if ((principal[x] & sa & ~sb) == 0) r |= std::uint64_t{1} << x;
      imp[a * n + b] = index.at(r);
    }
  }
  return HeytingAlgebra::from_tables(std::move(order), std::move(meet), std::move(join), std::move(imp));
}

}  // namespace heyting
