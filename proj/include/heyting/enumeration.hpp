#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "heyting/algebra.hpp"
#include "heyting/constructors.hpp"
#include "heyting/isomorphism.hpp"

namespace heyting {

struct EnumerationBudget {
  std::size_t max_algebra_size = 8;
  /// Largest join-irreducible poset explored. Enumeration is complete for
  /// sizes up to max_algebra_size whenever this is at least
  /// max_algebra_size - 1.
  std::size_t max_ji_poset_size = 7;

  bool complete() const { return max_ji_poset_size + 1 >= max_algebra_size; }
};

/// One representative of an isomorphism class, with its canonical code.
struct EnumeratedAlgebra {
  HeytingAlgebra algebra;
  std::string code;
};

namespace detail {

/// Poset on at most 31 points stored as strict-downset masks.
struct SmallPoset {
  std::vector<std::uint32_t> below;

  std::size_t size() const { return below.size(); }

  Poset to_poset() const {
    Poset p(below.size());
    for (std::size_t x = 0; x < below.size(); ++x)
      for (std::size_t y = 0; y < below.size(); ++y)
        if (below[x] >> y & 1u) p.set_leq(y, x, true);
    return p;
  }
};

inline bool is_downset(const SmallPoset& p, std::uint32_t s) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if ((s >> x & 1u) && (p.below[x] & ~s) != 0) return false;
  return true;
}

/// Number of downsets of p, counting stops once it passes `cap`.
inline std::size_t count_downsets(const SmallPoset& p, std::size_t cap) {
  // Points are added as maximal elements, so index order is a linear extension.
  std::size_t count = 0;
  auto walk = [&](auto&& self, std::size_t pos, std::uint32_t current) -> void {
    if (count > cap) return;
    if (pos == p.size()) {
      ++count;
      return;
    }
    self(self, pos + 1, current);
    if ((p.below[pos] & ~current) == 0) self(self, pos + 1, current | (1u << pos));
  };
  walk(walk, 0, 0);
  return count;
}

inline std::vector<std::uint32_t> all_downsets(const SmallPoset& p) {
  std::vector<std::uint32_t> out;
  auto walk = [&](auto&& self, std::size_t pos, std::uint32_t current) -> void {
    if (pos == p.size()) {
      out.push_back(current);
      return;
    }
    self(self, pos + 1, current);
    if ((p.below[pos] & ~current) == 0) self(self, pos + 1, current | (1u << pos));
  };
  walk(walk, 0, 0);
  return out;
}

}  // namespace detail

/// Unlabelled posets whose downset lattice has at most `max_downsets`
/// elements, up to `max_points` points, keyed by canonical code.
///
/// Every poset arises from a smaller one by adding a maximal point above
/// some downset, and removing a maximal point never increases the number of
/// downsets, so pruning on the downset count loses nothing.
inline std::vector<detail::SmallPoset> enumerate_small_posets(std::size_t max_points,
                                                              std::size_t max_downsets) {
  if (max_points > 24) throw Error(ErrorKind::BudgetExceeded, "join-irreducible posets limited to 24 points");
  std::vector<detail::SmallPoset> all;
  std::map<std::string, detail::SmallPoset> level;
  level.emplace(std::string{}, detail::SmallPoset{});
  for (std::size_t k = 0;; ++k) {
    for (const auto& [code, p] : level) all.push_back(p);
    if (k == max_points) break;
    std::map<std::string, detail::SmallPoset> next;
    for (const auto& [code, p] : level) {
      for (std::uint32_t d : detail::all_downsets(p)) {
        detail::SmallPoset child = p;
        child.below.push_back(d);
        if (detail::count_downsets(child, max_downsets) > max_downsets) continue;
        next.emplace(canonical_code(child.to_poset()), std::move(child));
      }
    }
    if (next.empty()) break;
    level = std::move(next);
  }
  return all;
}

/// One representative per isomorphism class of Heyting algebras of size
/// 2..max_algebra_size, built as downset lattices of join-irreducible
/// posets and sorted by (size, canonical code).
inline std::vector<EnumeratedAlgebra> enumerate_heyting(const EnumerationBudget& budget,
                                                        unsigned jobs = 1) {
  if (budget.max_algebra_size > 24) {
    throw Error(ErrorKind::BudgetExceeded, "enumeration is limited to algebras of size 24");
  }
  if (budget.max_algebra_size < 2) return {};
  const auto posets = enumerate_small_posets(budget.max_ji_poset_size, budget.max_algebra_size);

  auto build = [&](std::size_t begin, std::size_t end) {
    std::vector<EnumeratedAlgebra> out;
    for (std::size_t i = begin; i < end; ++i) {
      if (posets[i].size() == 0) continue;
      HeytingAlgebra h = downset_lattice(posets[i].to_poset());
      if (h.size() > budget.max_algebra_size) continue;
      std::string code = canonical_code(h);
      out.push_back({std::move(h), std::move(code)});
    }
    return out;
  };

  std::vector<EnumeratedAlgebra> found;
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    found = build(0, posets.size());
  } else {
    std::vector<std::future<std::vector<EnumeratedAlgebra>>> parts;
    const std::size_t chunk = (posets.size() + jobs - 1) / jobs;
    for (std::size_t b = 0; b < posets.size(); b += chunk) {
      parts.push_back(std::async(std::launch::async, build, b, std::min(posets.size(), b + chunk)));
    }
    for (auto& f : parts) {
      auto part = f.get();
      for (auto& e : part) found.push_back(std::move(e));
    }
  }

  std::map<std::pair<std::size_t, std::string>, EnumeratedAlgebra> unique;
  for (auto& e : found) {
    auto key = std::make_pair(e.algebra.size(), e.code);
    unique.emplace(std::move(key), std::move(e));
  }
  std::vector<EnumeratedAlgebra> out;
  out.reserve(unique.size());
  for (auto& [key, e] : unique) out.push_back(std::move(e));
  return out;
}

/// Default complete enumeration (sizes up to 8), computed once.
inline const std::vector<EnumeratedAlgebra>& default_enumeration() {
  static const std::vector<EnumeratedAlgebra> all = enumerate_heyting(EnumerationBudget{});
  return all;
}

/// Complete enumeration up to `max_size`, cached per size. Thread-safe.
inline const std::vector<EnumeratedAlgebra>& cached_enumeration(std::size_t max_size) {
  if (max_size == EnumerationBudget{}.max_algebra_size) return default_enumeration();
  static std::mutex lock;
  static std::map<std::size_t, std::vector<EnumeratedAlgebra>> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto it = cache.find(max_size);
  if (it == cache.end())
    it = cache.emplace(max_size, enumerate_heyting(EnumerationBudget{max_size, max_size > 0 ? max_size - 1 : 0})).first;
  return it->second;
}

}  // namespace heyting
