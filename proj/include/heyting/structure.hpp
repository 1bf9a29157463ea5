#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heyting/algebra.hpp"
#include "heyting/constructors.hpp"
#include "heyting/error.hpp"
#include "heyting/properties.hpp"

namespace heyting {

/// H split along a nontrivial central element c as H^c x H_c.
struct Decomposition {
  Element c;
  HeytingAlgebra upper;                 // elements >= c
  HeytingAlgebra lower;                 // elements <= c
  std::vector<Element> upper_elements;  // factor index -> element of H
  std::vector<Element> lower_elements;
  /// x -> index of (x | c, x & c) in product(upper, lower).
  std::vector<std::size_t> forward;

  /// (a, b) -> a & (b | ~c), returned as an element of H.
  Element inverse(const HeytingAlgebra& h, Element a_factor, Element b_factor) const {
    Element a = upper_elements[a_factor], b = lower_elements[b_factor];
    return h.meet(a, h.join(b, h.neg(c)));
  }
};

namespace detail {

/// Subalgebra-like factor on `members`, revalidated and re-indexed.
/// Returns the algebra and the map from its indices back to H.
inline std::pair<HeytingAlgebra, std::vector<Element>> factor_on(const HeytingAlgebra& h, const ElementSet& s) {
  auto [order, elements] = induced_order(h, s);
  HeytingAlgebra f = heyting_from_leq(order);
  // heyting_from_leq relabels into a linear extension; recover the labels.
  auto ext = order.linear_extension();
  std::vector<Element> back(elements.size());
  for (std::size_t i = 0; i < ext.size(); ++i) back[i] = elements[ext[i]];
  return {std::move(f), std::move(back)};
}

}  // namespace detail

inline Decomposition central_decompose(const HeytingAlgebra& h, Element c) {
  if (c >= h.size()) throw Error(ErrorKind::InvalidArgument, "element out of range");
  if (!is_central(h, c)) throw Error(ErrorKind::NotCentral, "element " + std::to_string(c) + " is not central");
  if (c == h.bot() || c == h.top()) {
    throw Error(ErrorKind::TrivialCenterElement, "bottom and top give a trivial decomposition");
  }
  Decomposition d{c, HeytingAlgebra{}, HeytingAlgebra{}, {}, {}, {}};
  std::tie(d.upper, d.upper_elements) = detail::factor_on(h, upset(h, c));
  std::tie(d.lower, d.lower_elements) = detail::factor_on(h, downset(h, c));

  std::map<Element, Element> up_index, low_index;
  for (std::size_t i = 0; i < d.upper_elements.size(); ++i) up_index[d.upper_elements[i]] = static_cast<Element>(i);
  for (std::size_t i = 0; i < d.lower_elements.size(); ++i) low_index[d.lower_elements[i]] = static_cast<Element>(i);
  const std::size_t nl = d.lower.size();
  d.forward.resize(h.size());
  for (Element x = 0; x < h.size(); ++x)
    d.forward[x] = up_index.at(h.join(x, c)) * nl + low_index.at(h.meet(x, c));

  // Verify the forward map is an isomorphism onto the product.
  const HeytingAlgebra prod = product(d.upper, d.lower);
  std::vector<bool> hit(prod.size(), false);
  for (Element x = 0; x < h.size(); ++x) {
    if (hit[d.forward[x]]) throw Error(ErrorKind::InvalidArgument, "decomposition map is not injective");
    hit[d.forward[x]] = true;
    const auto fx = static_cast<Element>(d.forward[x]);
    Element a = static_cast<Element>(fx / nl), b = static_cast<Element>(fx % nl);
    if (d.inverse(h, a, b) != x) throw Error(ErrorKind::InvalidArgument, "inverse map does not round-trip");
    for (Element y = 0; y < h.size(); ++y) {
      const auto fy = static_cast<Element>(d.forward[y]);
      if (d.forward[h.meet(x, y)] != prod.meet(fx, fy) || d.forward[h.join(x, y)] != prod.join(fx, fy) ||
          d.forward[h.imp(x, y)] != prod.imp(fx, fy)) {
        throw Error(ErrorKind::InvalidArgument, "decomposition map is not a homomorphism");
      }
    }
  }
  return d;
}

/// Least (in element order) maximal element of the non-central set, or
/// nothing when H is Boolean.
inline std::optional<Element> maximal_noncentral(const HeytingAlgebra& h) {
  const ElementSet c = center(h);
  for (Element s = 0; s < h.size(); ++s) {
    if (c.test(s)) continue;
    bool maximal = true;
    for (Element t = 0; t < h.size() && maximal; ++t)
      if (t != s && !c.test(t) && h.leq(s, t)) maximal = false;
    if (maximal) return s;
  }
  return std::nullopt;
}

inline bool is_maximal_noncentral(const HeytingAlgebra& h, Element s) {
  if (s >= h.size() || is_central(h, s)) return false;
  for (Element t = 0; t < h.size(); ++t)
    if (t != s && !is_central(h, t) && h.leq(s, t)) return false;
  return true;
}

struct TwoToOneReport {
  Element sigma;
  /// (central x, f(x)) pairs.
  std::vector<std::pair<Element, Element>> mapping;
  std::size_t center_size = 0;
  std::size_t noncentral_size = 0;
  std::size_t max_fiber = 0;
  bool images_noncentral = true;

  bool holds() const { return images_noncentral && max_fiber <= 2 && center_size <= 2 * noncentral_size; }
};

/// f(x) = sigma & x if sigma | x = top, else sigma & ~x, on the center.
inline TwoToOneReport lem_two_to_one(const HeytingAlgebra& h, Element sigma) {
  if (!is_maximal_noncentral(h, sigma)) {
    throw Error(ErrorKind::NotMaximalNonCentral, "element " + std::to_string(sigma) + " is not maximal non-central");
  }
  TwoToOneReport r;
  r.sigma = sigma;
  const ElementSet c = center(h);
  r.center_size = c.count();
  r.noncentral_size = h.size() - r.center_size;
  std::map<Element, std::size_t> fiber;
  for (Element x : members(c)) {
    Element fx = h.join(sigma, x) == h.top() ? h.meet(sigma, x) : h.meet(sigma, h.neg(x));
    r.mapping.emplace_back(x, fx);
    if (c.test(fx)) r.images_noncentral = false;
    r.max_fiber = std::max(r.max_fiber, ++fiber[fx]);
  }
  return r;
}

/// Every x is below sigma or joins with it to top.
inline bool belt_check(const HeytingAlgebra& h, Element sigma) {
  if (!is_maximal_noncentral(h, sigma)) {
    throw Error(ErrorKind::NotMaximalNonCentral, "element " + std::to_string(sigma) + " is not maximal non-central");
  }
  for (Element x = 0; x < h.size(); ++x)
    if (!h.leq(x, sigma) && h.join(x, sigma) != h.top()) return false;
  return true;
}

/// For central x exactly one of x | sigma, ~x | sigma is top.
inline bool central_pair_check(const HeytingAlgebra& h, Element sigma) {
  if (!is_maximal_noncentral(h, sigma)) {
    throw Error(ErrorKind::NotMaximalNonCentral, "element " + std::to_string(sigma) + " is not maximal non-central");
  }
  for (Element x : members(center(h))) {
    bool a = h.join(x, sigma) == h.top();
    bool b = h.join(h.neg(x), sigma) == h.top();
    if (a == b) return false;
  }
  return true;
}

/// If a | b and a & b are central then so are a and b.
inline bool vee_wedge_center_check(const HeytingAlgebra& h) {
  const ElementSet c = center(h);
  for (Element a = 0; a < h.size(); ++a)
    for (Element b = 0; b < h.size(); ++b)
      if (c.test(h.join(a, b)) && c.test(h.meet(a, b)) && !(c.test(a) && c.test(b))) return false;
  return true;
}

}  // namespace heyting
