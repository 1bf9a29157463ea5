#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "heyting/algebra.hpp"

namespace heyting {

namespace detail {

using Coloring = std::vector<std::size_t>;

/// Colour refinement on a poset: start from (down-degree, up-degree) and
/// repeatedly split by the multisets of colours strictly below and above.
/// Colours are ranks of sorted signatures, so the result does not depend on
/// the labelling of the input.
inline Coloring refine(const Poset& p, Coloring colors) {
  const std::size_t n = p.size();
  std::size_t classes = 0;
  {
    auto sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    classes = static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }
  while (true) {
    using Signature = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>;
    std::vector<Signature> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::size_t> below, above;
      for (std::size_t u = 0; u < n; ++u) {
        if (u == v) continue;
        if (p.leq(u, v)) below.push_back(colors[u]);
        if (p.leq(v, u)) above.push_back(colors[u]);
      }
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      sig[v] = {colors[v], std::move(below), std::move(above)};
    }
    auto distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    Coloring next(n);
    for (std::size_t v = 0; v < n; ++v) {
      next[v] = static_cast<std::size_t>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    colors = std::move(next);
    if (distinct.size() == classes) return colors;
    classes = distinct.size();
  }
}

inline Coloring initial_coloring(const Poset& p) {
  const std::size_t n = p.size();
  Coloring c(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t down = 0, up = 0;
    for (std::size_t u = 0; u < n; ++u) {
      down += p.leq(u, v) ? 1 : 0;
      up += p.leq(v, u) ? 1 : 0;
    }
    c[v] = down * (n + 1) + up;
  }
  return c;
}

inline std::string code_for(const Poset& p, const Coloring& discrete) {
  const std::size_t n = p.size();
  std::vector<std::size_t> at(n);
  for (std::size_t v = 0; v < n; ++v) at[discrete[v]] = v;
  std::string code(n * n, '0');
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.leq(at[i], at[j])) code[i * n + j] = '1';
  return code;
}

inline void canonical_search(const Poset& p, const Coloring& colors, std::string& best,
                             Coloring& best_coloring) {
  const std::size_t n = p.size();
  // First non-singleton cell, by colour value.
  std::vector<std::size_t> count(n, 0);
  for (auto c : colors) ++count[c];
  std::size_t target = n;
  for (std::size_t c = 0; c < n; ++c) {
    if (count[c] > 1) {
      target = c;
      break;
    }
  }
  if (target == n) {
    std::string code = code_for(p, colors);
    if (best.empty() || code < best) {
      best = std::move(code);
      best_coloring = colors;
    }
    return;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (colors[v] != target) continue;
    Coloring next(n);
    for (std::size_t u = 0; u < n; ++u) next[u] = 2 * colors[u] + ((colors[u] == target && u != v) ? 1 : 0);
    canonical_search(p, refine(p, std::move(next)), best, best_coloring);
  }
}

}  // namespace detail

/// A labelling-independent string for the isomorphism class of a poset: the
/// lexicographically least relation matrix over the leaves of an
/// individualisation-refinement search. Two posets are isomorphic exactly
/// when their codes are equal. Intended for the small structures met during
/// enumeration.
inline std::string canonical_code(const Poset& p) {
  if (p.size() == 0) return {};
  std::string best;
  detail::Coloring best_coloring;
  detail::canonical_search(p, detail::refine(p, detail::initial_coloring(p)), best, best_coloring);
  return best;
}

/// Permutation taking `p` to its canonical relabelling: result[k] is the
/// original index at canonical position k.
inline std::vector<std::size_t> canonical_order(const Poset& p) {
  std::string best;
  detail::Coloring best_coloring;
  detail::canonical_search(p, detail::refine(p, detail::initial_coloring(p)), best, best_coloring);
  std::vector<std::size_t> at(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) at[best_coloring[v]] = v;
  return at;
}

inline std::string canonical_code(const HeytingAlgebra& h) { return canonical_code(h.poset()); }

/// Order-isomorphism search between two posets: a bijection f with
/// a <= b  <=>  f(a) <= f(b). Candidates are filtered by refined colours,
/// then matched by backtracking.
inline std::optional<std::vector<std::size_t>> find_order_isomorphism(const Poset& p, const Poset& q) {
  const std::size_t n = p.size();
  if (q.size() != n) return std::nullopt;
  const auto cp = detail::refine(p, detail::initial_coloring(p));
  const auto cq = detail::refine(q, detail::initial_coloring(q));
  {
    auto sp = cp, sq = cq;
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    if (sp != sq) return std::nullopt;
  }
  // Assign rarest colours first so the branching stays narrow.
  std::map<std::size_t, std::size_t> freq;
  for (auto c : cp) ++freq[c];
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return freq[cp[a]] < freq[cp[b]]; });

  std::vector<std::size_t> image(n, n);
  std::vector<bool> used(n, false);
  auto consistent = [&](std::size_t v, std::size_t w, std::size_t depth) {
    for (std::size_t k = 0; k < depth; ++k) {
      const std::size_t u = order[k];
      if (p.leq(u, v) != q.leq(image[u], w) || p.leq(v, u) != q.leq(w, image[u])) return false;
    }
    return true;
  };
  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const std::size_t v = order[depth];
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || cq[w] != cp[v] || !consistent(v, w, depth)) continue;
      used[w] = true;
      image[v] = w;
      if (self(self, depth + 1)) return true;
      used[w] = false;
    }
    image[v] = n;
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return image;
}

/// A bijection from `a` to `b` preserving meet, join, implication, bottom
/// and top, if one exists. For finite lattices an order isomorphism already
/// preserves all of these; the tables are checked anyway.
inline std::optional<std::vector<Element>> is_isomorphic(const HeytingAlgebra& a, const HeytingAlgebra& b) {
  auto found = find_order_isomorphism(a.poset(), b.poset());
  if (!found) return std::nullopt;
  std::vector<Element> f(found->begin(), found->end());
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (f[a.meet(x, y)] != b.meet(f[x], f[y]) || f[a.join(x, y)] != b.join(f[x], f[y]) ||
          f[a.imp(x, y)] != b.imp(f[x], f[y])) {
        return std::nullopt;
      }
    }
  }
  if (f[a.bot()] != b.bot() || f[a.top()] != b.top()) return std::nullopt;
  return f;
}

}  // namespace heyting
