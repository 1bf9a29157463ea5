#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "heyting/algebra.hpp"
#include "heyting/error.hpp"

namespace heyting {

inline constexpr std::uint32_t kBlackBoxRedundancy = 16;

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b) { return splitmix64(a ^ splitmix64(b)); }

/// Keyed permutation of [0, 2^bits): a balanced Feistel network on
/// 2 * ceil(bits / 2) bits, cycle-walked back into range.
class FeistelPrp {
 public:
  FeistelPrp() = default;
  FeistelPrp(unsigned bits, std::uint64_t key) : bits_(bits), half_((bits + 1) / 2) {
    for (unsigned r = 0; r < kRounds; ++r) keys_[r] = mix(key, r + 1);
  }

  std::uint64_t forward(std::uint64_t x) const {
    do x = feistel(x, false);
    while (!in_range(x));
    return x;
  }
  std::uint64_t backward(std::uint64_t x) const {
    do x = feistel(x, true);
    while (!in_range(x));
    return x;
  }

 private:
  static constexpr unsigned kRounds = 6;

  bool in_range(std::uint64_t x) const { return bits_ >= 64 || x < (std::uint64_t{1} << bits_); }
  std::uint64_t half_mask() const { return half_ >= 64 ? ~0ull : (std::uint64_t{1} << half_) - 1; }

  std::uint64_t feistel(std::uint64_t x, bool inverse) const {
    const std::uint64_t m = half_mask();
    std::uint64_t l = (x >> half_) & m, r = x & m;
    for (unsigned i = 0; i < kRounds; ++i) {
      unsigned k = inverse ? kRounds - 1 - i : i;
      if (!inverse) {
        std::uint64_t next = l ^ (splitmix64(r ^ keys_[k]) & m);
        l = r;
        r = next;
      } else {
        std::uint64_t prev = r ^ (splitmix64(l ^ keys_[k]) & m);
        r = l;
        l = prev;
      }
    }
    return (l << half_) | r;
  }

  unsigned bits_ = 0, half_ = 0;
  std::uint64_t keys_[kRounds] = {};
};

struct BlackBoxTrapdoor;

}  // namespace detail

/// A Heyting algebra hidden behind bitstring cryptoelements. Only the
/// oracles are public: BB1 sample, BB2 meet/join/imp and bot, BB3 equal.
class BlackBoxHandle {
 public:
  using Crypto = std::uint64_t;

  unsigned ell() const { return ell_; }

  /// BB1: a cryptoelement whose decryption is uniform over H. The caller
  /// supplies the counter; equal counters give equal samples.
  Crypto sample(std::uint64_t counter) const {
    std::mt19937_64 rng(detail::mix(key_, counter));
    std::uniform_int_distribution<std::size_t> elem(0, h_.size() - 1);
    std::uniform_int_distribution<std::uint32_t> nonce(0, kBlackBoxRedundancy - 1);
    Element e = static_cast<Element>(elem(rng));
    return encrypt(e, nonce(rng));
  }

  /// BB2.
  Crypto meet(Crypto x, Crypto y) const { return apply(1, x, y, h_.meet(decrypt(x), decrypt(y))); }
  Crypto join(Crypto x, Crypto y) const { return apply(2, x, y, h_.join(decrypt(x), decrypt(y))); }
  Crypto imp(Crypto x, Crypto y) const { return apply(3, x, y, h_.imp(decrypt(x), decrypt(y))); }
  Crypto bot() const { return encrypt(h_.bot(), nonce_for(0, 0, 0)); }

  /// BB3.
  bool equal(Crypto x, Crypto y) const { return decrypt(x) == decrypt(y); }

 private:
  friend BlackBoxHandle bb_wrap(const HeytingAlgebra& h, unsigned ell, std::uint64_t seed);
  friend struct detail::BlackBoxTrapdoor;

  BlackBoxHandle(HeytingAlgebra h, unsigned ell, std::uint64_t key)
      : h_(std::move(h)), ell_(ell), key_(key), prp_(ell, detail::mix(key, 0xB1ACB0Bull)) {}

  Crypto encrypt(Element e, std::uint32_t nonce) const {
    return prp_.forward(static_cast<std::uint64_t>(e) * kBlackBoxRedundancy + nonce);
  }
  Element decrypt(Crypto c) const {
    if (ell_ < 64 && c >> ell_) throw Error(ErrorKind::InvalidArgument, "bitstring longer than ell");
    std::uint64_t v = prp_.backward(c);
    if (v >= static_cast<std::uint64_t>(h_.size()) * kBlackBoxRedundancy)
      throw Error(ErrorKind::InvalidArgument, "bitstring is not a cryptoelement");
    return static_cast<Element>(v / kBlackBoxRedundancy);
  }
  std::uint32_t nonce_for(std::uint64_t op, Crypto x, Crypto y) const {
    return static_cast<std::uint32_t>(detail::mix(detail::mix(key_ ^ op, x), y) % kBlackBoxRedundancy);
  }
  Crypto apply(std::uint64_t op, Crypto x, Crypto y, Element result) const {
    return encrypt(result, nonce_for(op, x, y));
  }

  HeytingAlgebra h_;
  unsigned ell_;
  std::uint64_t key_;
  detail::FeistelPrp prp_;
};

/// Hides h behind ell-bit cryptoelements; each element has
/// kBlackBoxRedundancy encodings.
inline BlackBoxHandle bb_wrap(const HeytingAlgebra& h, unsigned ell, std::uint64_t seed) {
  const std::uint64_t needed = static_cast<std::uint64_t>(h.size()) * kBlackBoxRedundancy;
  if (ell == 0 || ell > 64 || (ell < 64 && (std::uint64_t{1} << ell) < needed)) {
    throw Error(ErrorKind::EllTooSmall, "ell = " + std::to_string(ell) + " cannot encode " + std::to_string(needed) +
                                            " cryptoelements");
  }
  return BlackBoxHandle(h, ell, seed);
}

/// One-sided Boolean test: draws `rounds` samples x and accepts iff
/// x | (x -> bot) equals bot -> bot for each. Uses the oracles only.
template <class Oracle>
bool monte_carlo_boolean_test(const Oracle& bb, unsigned rounds, std::uint64_t counter_base) {
  const auto bot = bb.bot();
  const auto top = bb.imp(bot, bot);
  for (unsigned i = 0; i < rounds; ++i) {
    const auto x = bb.sample(counter_base + i);
    if (!bb.equal(bb.join(x, bb.imp(x, bot)), top)) return false;
  }
  return true;
}

struct AcceptRate {
  std::uint64_t accepted = 0;
  std::uint64_t trials = 0;
  double rate() const { return trials ? static_cast<double>(accepted) / static_cast<double>(trials) : 0.0; }
};

/// Runs `trials` independent tests on disjoint counter ranges.
template <class Oracle>
AcceptRate monte_carlo_accept_rate(const Oracle& bb, unsigned rounds, std::uint64_t trials) {
  AcceptRate r{0, trials};
  for (std::uint64_t t = 0; t < trials; ++t) r.accepted += monte_carlo_boolean_test(bb, rounds, t * rounds);
  return r;
}

namespace detail {

/// Test-only access to the hidden algebra and the decryption map.
struct BlackBoxTrapdoor {
  static Element decrypt(const BlackBoxHandle& bb, BlackBoxHandle::Crypto c) { return bb.decrypt(c); }
  static BlackBoxHandle::Crypto encrypt(const BlackBoxHandle& bb, Element e, std::uint32_t nonce) {
    return bb.encrypt(e, nonce);
  }
  static const HeytingAlgebra& algebra(const BlackBoxHandle& bb) { return bb.h_; }
};

}  // namespace detail

}  // namespace heyting
