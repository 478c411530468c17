#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gsg/context.hpp"
#include "gsg/error.hpp"
#include "gsg/grade.hpp"
#include "gsg/subset.hpp"

namespace gsg {

/// The four maps between S and its operator semigroups.
///   star:       R -> S, a  |-> quantify over gamma of [gamma, a]
///   star_prime: S -> R, [alpha, a] |-> quantify over s of s alpha a
///   plus:       L -> S, a  |-> quantify over gamma of [a, gamma]
///   plus_prime: S -> L, [a, alpha] |-> quantify over s of a alpha s
/// "Quantify" is "for all" on crisp subsets and inf (mu) / sup (nu) on fuzzy ones.
enum class TransferMap { star, star_prime, plus, plus_prime };

inline const char* to_string(TransferMap m) {
  switch (m) {
    case TransferMap::star: return "star";
    case TransferMap::star_prime: return "star-prime";
    case TransferMap::plus: return "plus";
    case TransferMap::plus_prime: return "plus-prime";
  }
  return "?";
}

inline TransferMap parse_transfer_map(std::string_view name) {
  if (name == "star") return TransferMap::star;
  if (name == "star-prime") return TransferMap::star_prime;
  if (name == "plus") return TransferMap::plus;
  if (name == "plus-prime") return TransferMap::plus_prime;
  throw input_error("unknown map '" + std::string(name) + "'");
}

constexpr Carrier source_of(TransferMap m) {
  switch (m) {
    case TransferMap::star: return Carrier::R;
    case TransferMap::plus: return Carrier::L;
    default: return Carrier::S;
  }
}

constexpr Carrier target_of(TransferMap m) {
  switch (m) {
    case TransferMap::star_prime: return Carrier::R;
    case TransferMap::plus_prime: return Carrier::L;
    default: return Carrier::S;
  }
}

namespace detail {

/// Calls `f(source_index)` for every source element quantified over when
/// computing the image at target index `k`, using raw pair `p` for quotient
/// targets.
template <typename F>
void for_each_preimage(const GammaContext& ctx, TransferMap m, Index k, RawPair p, F&& f) {
  const GammaSemigroup& s = ctx.semigroup();
  switch (m) {
    case TransferMap::star:
      for (Index g = 0; g < s.g_size(); ++g) f(ctx.right().class_of(g, k));
      break;
    case TransferMap::plus:
      for (Index g = 0; g < s.g_size(); ++g) f(ctx.left().class_of(k, g));
      break;
    case TransferMap::star_prime:  // p = (alpha, x)
      for (Index t = 0; t < s.s_size(); ++t) f(s.product(t, p.first, p.second));
      break;
    case TransferMap::plus_prime:  // p = (x, alpha)
      for (Index t = 0; t < s.s_size(); ++t) f(s.product(p.first, p.second, t));
      break;
  }
}

inline const std::vector<RawPair>& pairs_for(const GammaContext& ctx, TransferMap m, Index k) {
  static const std::vector<RawPair> none{RawPair{}};
  if (m == TransferMap::star_prime) return ctx.right().members(k);
  if (m == TransferMap::plus_prime) return ctx.left().members(k);
  return none;
}

}  // namespace detail

inline CrispSubset transfer_crisp(const CrispSubset& x, TransferMap m, const GammaContext& ctx) {
  ctx.require_on(x, source_of(m));
  const Carrier target = target_of(m);
  CrispSubset out(target, ctx.size(target));
  for (Index k = 0; k < out.carrier_size(); ++k) {
    bool first = true, value = false;
    for (const RawPair& p : detail::pairs_for(ctx, m, k)) {
      bool all = true;
      detail::for_each_preimage(ctx, m, k, p, [&](Index e) { all = all && x.contains(e); });
      if (!first && all != value) throw std::logic_error("crisp transfer depends on the representative");
      value = all;
      first = false;
    }
    if (value) out.insert(k);
  }
  return out;
}

inline IFSubset transfer_fuzzy(const IFSubset& a, TransferMap m, const GammaContext& ctx) {
  ctx.require_on(a, source_of(m));
  const Carrier target = target_of(m);
  const std::size_t n = ctx.size(target);
  std::vector<Grade> mu(n), nu(n);
  for (Index k = 0; k < n; ++k) {
    bool first = true;
    for (const RawPair& p : detail::pairs_for(ctx, m, k)) {
      bool seen = false;
      Grade lo, hi;
      detail::for_each_preimage(ctx, m, k, p, [&](Index e) {
        if (!seen) {
          lo = a.mu(e);
          hi = a.nu(e);
          seen = true;
        } else {
          lo = min(lo, a.mu(e));
          hi = max(hi, a.nu(e));
        }
      });
      if (!first && (lo != mu[k] || hi != nu[k]))
        throw std::logic_error("fuzzy transfer depends on the representative");
      mu[k] = lo;
      nu[k] = hi;
      first = false;
    }
  }
  return IFSubset(target, std::move(mu), std::move(nu));
}

// Round trips through an operator semigroup and back.

/// (A star-prime) star, on IFS(S).
inline IFSubset star_prime_then_star(const IFSubset& a, const GammaContext& ctx) {
  return transfer_fuzzy(transfer_fuzzy(a, TransferMap::star_prime, ctx), TransferMap::star, ctx);
}
/// (B star) star-prime, on IFS(R).
inline IFSubset star_then_star_prime(const IFSubset& b, const GammaContext& ctx) {
  return transfer_fuzzy(transfer_fuzzy(b, TransferMap::star, ctx), TransferMap::star_prime, ctx);
}
/// (A plus-prime) plus, on IFS(S).
inline IFSubset plus_prime_then_plus(const IFSubset& a, const GammaContext& ctx) {
  return transfer_fuzzy(transfer_fuzzy(a, TransferMap::plus_prime, ctx), TransferMap::plus, ctx);
}
/// (B plus) plus-prime, on IFS(L).
inline IFSubset plus_then_plus_prime(const IFSubset& b, const GammaContext& ctx) {
  return transfer_fuzzy(transfer_fuzzy(b, TransferMap::plus, ctx), TransferMap::plus_prime, ctx);
}

}  // namespace gsg
