#pragma once

#include <vector>

#include "heyting/algebra.hpp"

namespace heyting {

/// The two distinguished subsets: the center (elements satisfying excluded
/// middle) and the double-negation fixed points.
struct Loci {
  ElementSet center;
  ElementSet dneg;
};

inline bool is_central(const HeytingAlgebra& h, Element x) {
  return h.join(x, h.neg(x)) == h.top();
}

inline bool is_regular(const HeytingAlgebra& h, Element x) { return h.neg(h.neg(x)) == x; }

inline bool is_dense(const HeytingAlgebra& h, Element x) { return h.neg(x) == h.bot(); }

inline Loci loci(const HeytingAlgebra& h) {
  Loci out{h.empty_set(), h.empty_set()};
  for (Element x = 0; x < h.size(); ++x) {
    if (is_central(h, x)) out.center.set(x);
    if (is_regular(h, x)) out.dneg.set(x);
  }
  return out;
}

inline ElementSet center(const HeytingAlgebra& h) { return loci(h).center; }

/// M(x) = { y : x -> y = ~x v y }.
inline ElementSet materializer(const HeytingAlgebra& h, Element x) {
  ElementSet out = h.empty_set();
  const Element nx = h.neg(x);
  for (Element y = 0; y < h.size(); ++y)
    if (h.imp(x, y) == h.join(nx, y)) out.set(y);
  return out;
}

inline bool is_boolean(const HeytingAlgebra& h) {
  for (Element x = 0; x < h.size(); ++x)
    for (Element y = 0; y < h.size(); ++y)
      if (h.imp(x, y) != h.join(h.neg(x), y)) return false;
  return true;
}

inline ElementSet upset(const HeytingAlgebra& h, Element x) {
  ElementSet out = h.empty_set();
  for (Element y = x; y < h.size(); ++y)
    if (h.leq(x, y)) out.set(y);
  return out;
}

inline ElementSet downset(const HeytingAlgebra& h, Element x) {
  ElementSet out = h.empty_set();
  for (Element y = 0; y <= x; ++y)
    if (h.leq(y, x)) out.set(y);
  return out;
}

inline std::vector<Element> members(const ElementSet& s) {
  std::vector<Element> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) {
    out.push_back(static_cast<Element>(i));
  }
  return out;
}

/// Upper covers count and lower covers count of x.
inline std::pair<std::size_t, std::size_t> cover_degrees(const HeytingAlgebra& h, Element x) {
  std::size_t up = 0, down = 0;
  const std::size_t n = h.size();
  for (Element y = 0; y < n; ++y) {
    if (y == x) continue;
    auto covers = [&](Element lo, Element hi) {
      if (!h.leq(lo, hi)) return false;
      for (Element z = 0; z < n; ++z)
        if (z != lo && z != hi && h.leq(lo, z) && h.leq(z, hi)) return false;
      return true;
    };
    if (covers(x, y)) ++up;
    if (covers(y, x)) ++down;
  }
  return {up, down};
}

/// Whether `s` contains bottom and top and is closed under meet, join and
/// implication.
inline bool is_subalgebra(const HeytingAlgebra& h, const ElementSet& s) {
  if (!s.test(h.bot()) || !s.test(h.top())) return false;
  const auto xs = members(s);
  for (Element a : xs)
    for (Element b : xs)
      if (!s.test(h.meet(a, b)) || !s.test(h.join(a, b)) || !s.test(h.imp(a, b))) return false;
  return true;
}

/// The induced suborder on `s` as a standalone poset, together with the map
/// from new indices back to elements of `h`.
inline std::pair<Poset, std::vector<Element>> induced_order(const HeytingAlgebra& h,
                                                            const ElementSet& s) {
  auto xs = members(s);
  Poset p(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j) p.set_leq(i, j, h.leq(xs[i], xs[j]));
  return {std::move(p), std::move(xs)};
}

}  // namespace heyting
