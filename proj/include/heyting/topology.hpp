#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "heyting/algebra.hpp"
#include "heyting/error.hpp"
#include "heyting/properties.hpp"

namespace heyting {

inline constexpr std::size_t kMaxTopologyPoints = 16;

/// Open sets of a finite space as bitmasks over the points.
struct FiniteTopology {
  std::size_t points = 0;
  std::vector<std::uint32_t> opens;

  std::uint32_t ground() const { return points == 32 ? ~0u : (1u << points) - 1; }
};

/// Sorts and dedups the opens, then checks the topology axioms.
inline FiniteTopology make_topology(std::size_t points, std::vector<std::uint32_t> opens) {
  if (points > kMaxTopologyPoints) {
    throw Error(ErrorKind::NotATopology, "at most " + std::to_string(kMaxTopologyPoints) + " points supported");
  }
  FiniteTopology t{points, {}};
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  for (auto o : opens)
    if (o & ~t.ground()) throw Error(ErrorKind::NotATopology, "open set mentions a point outside the ground set");
  if (!std::binary_search(opens.begin(), opens.end(), 0u))
    throw Error(ErrorKind::NotATopology, "empty set is not open");
  if (!std::binary_search(opens.begin(), opens.end(), t.ground()))
    throw Error(ErrorKind::NotATopology, "ground set is not open");
  for (auto a : opens) {
    for (auto b : opens) {
      if (!std::binary_search(opens.begin(), opens.end(), a | b))
        throw Error(ErrorKind::NotATopology, "not closed under union");
      if (!std::binary_search(opens.begin(), opens.end(), a & b))
        throw Error(ErrorKind::NotATopology, "not closed under intersection");
    }
  }
  t.opens = std::move(opens);
  return t;
}

inline std::uint32_t interior(const FiniteTopology& t, std::uint32_t s) {
  std::uint32_t out = 0;
  for (auto o : t.opens)
    if ((o & ~s) == 0) out |= o;
  return out;
}

inline bool is_open(const FiniteTopology& t, std::uint32_t s) {
  return std::binary_search(t.opens.begin(), t.opens.end(), s);
}

inline bool is_discrete(const FiniteTopology& t) { return t.opens.size() == (std::size_t{1} << t.points); }

/// Kolmogorov: any two points are told apart by some open set.
inline bool is_t0(const FiniteTopology& t) {
  for (std::size_t a = 0; a < t.points; ++a)
    for (std::size_t b = a + 1; b < t.points; ++b) {
      bool separated = false;
      for (auto o : t.opens)
        if (((o >> a) & 1u) != ((o >> b) & 1u)) separated = true;
      if (!separated) return false;
    }
  return true;
}

struct OpenSetAlgebra {
  HeytingAlgebra algebra;
  std::vector<std::uint32_t> open_of;  // element -> open set
};

/// Opens ordered by inclusion. The implication table is checked against
/// interior(complement(x) | y).
inline OpenSetAlgebra open_set_algebra(const FiniteTopology& t) {
  const FiniteTopology v = make_topology(t.points, t.opens);
  const std::size_t n = v.opens.size();
  // Opens sorted numerically: a subset is never numerically larger, so
  // this order is already a linear extension.
  Poset p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.set_leq(i, j, (v.opens[i] & ~v.opens[j]) == 0);
  OpenSetAlgebra out{heyting_from_leq(p), v.opens};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::uint32_t expected = interior(v, (~v.opens[i] & v.ground()) | v.opens[j]);
      if (out.open_of[out.algebra.imp(static_cast<Element>(i), static_cast<Element>(j))] != expected)
        throw Error(ErrorKind::InvalidArgument, "implication differs from interior(complement(x) | y)");
    }
  }
  return out;
}

struct ClopenCensus {
  std::size_t clopen = 0;
  std::size_t non_clopen = 0;
};

inline ClopenCensus clopen_census(const FiniteTopology& t) {
  const FiniteTopology v = make_topology(t.points, t.opens);
  ClopenCensus c;
  for (auto o : v.opens) {
    if (is_open(v, ~o & v.ground())) ++c.clopen;
    else ++c.non_clopen;
  }
  return c;
}

/// Every topology on `points` labelled points (at most 5).
inline std::vector<FiniteTopology> enumerate_topologies(std::size_t points) {
  if (points > 5) throw Error(ErrorKind::BudgetExceeded, "topology enumeration is limited to 5 points");
  const std::uint32_t ground = (1u << points) - 1;
  std::vector<std::uint32_t> middle;
  for (std::uint32_t s = 1; s < ground; ++s) middle.push_back(s);
  std::vector<FiniteTopology> out;
  std::vector<std::uint32_t> family;
  // Depth-first over the middle subsets, keeping only families closed so far.
  auto closed_with = [&](std::uint32_t s) {
    for (auto o : family) {
      std::uint32_t u = o | s, i = o & s;
      if (u != ground && u != s && !std::binary_search(family.begin(), family.end(), u) && u < s) return false;
      if (i != 0 && i != s && !std::binary_search(family.begin(), family.end(), i) && i < s) return false;
    }
    return true;
  };
  auto walk = [&](auto&& self, std::size_t idx) -> void {
    if (idx == middle.size()) {
      std::vector<std::uint32_t> opens = family;
      opens.push_back(0);
      opens.push_back(ground);
      try {
        out.push_back(make_topology(points, std::move(opens)));
      } catch (const Error&) {
      }
      return;
    }
    self(self, idx + 1);
    if (closed_with(middle[idx])) {
      family.push_back(middle[idx]);
      self(self, idx + 1);
      family.pop_back();
    }
  };
  if (points == 0) return {make_topology(0, {0})};
  walk(walk, 0);
  return out;
}

}  // namespace heyting
