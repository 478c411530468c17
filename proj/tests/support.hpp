#pragma once

// Small named instances and brute-force oracles written straight from the
// definitions on raw tables. Nothing here goes through ProductView or the
// transfer code, so agreement with the library is a real cross-check.

#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include "gsg/gsg.hpp"

namespace fixtures {

using gsg::GammaSemigroup;
using gsg::Index;

inline GammaSemigroup singleton() { return GammaSemigroup(1, 1, {0}); }

/// S = {0,1}, one operator, x g y = x.
inline GammaSemigroup left_zero() {
  return GammaSemigroup::from_function(2, 1, [](Index x, Index, Index) { return x; });
}

/// S = Gamma = {0,1} with x g y = x g y mod 2.
inline GammaSemigroup i2() {
  return GammaSemigroup::from_function(2, 2, [](Index x, Index g, Index y) { return x * g * y; });
}

/// S = {0,1}, one operator, 0 g 1 = 1 and every other product 0. Not associative.
inline GammaSemigroup broken() {
  return GammaSemigroup::from_function(2, 1, [](Index x, Index, Index y) -> Index { return x == 0 && y == 1; });
}

/// Z3 under x g y = x + g + y mod 3 with Gamma = Z3: commutative, both unities.
inline GammaSemigroup z3() {
  return GammaSemigroup::from_function(3, 3, [](Index x, Index g, Index y) { return (x + g + y) % 3; });
}

/// Prime in the sandwich sense on L while not completely prime.
/// x g0 y = 0 except 2 g0 1 = 1, 2 g0 2 = 2; x g1 y = 0 except 1 g1 1 = 1, 1 g1 2 = 2.
inline GammaSemigroup sandwich_prime_instance() {
  static const Index block[2][3][3] = {{{0, 0, 0}, {0, 0, 0}, {0, 1, 2}}, {{0, 0, 0}, {0, 1, 2}, {0, 0, 0}}};
  return GammaSemigroup::from_function(3, 2, [](Index x, Index g, Index y) { return block[g][x][y]; });
}

}  // namespace fixtures

namespace oracle {

using gsg::GammaSemigroup;
using gsg::Grade;
using gsg::Index;

inline bool associative(std::size_t n, std::size_t m, const std::vector<Index>& t) {
  auto at = [&](Index x, Index g, Index y) { return t[(x * m + g) * n + y]; };
  for (Index x = 0; x < n; ++x)
    for (Index a = 0; a < m; ++a)
      for (Index y = 0; y < n; ++y)
        for (Index b = 0; b < m; ++b)
          for (Index z = 0; z < n; ++z)
            if (at(at(x, a, y), b, z) != at(x, a, at(y, b, z))) return false;
  return true;
}

/// Counts associative ternary tables by walking all n^(n m n) of them.
inline std::size_t count_tables(std::size_t n, std::size_t m) {
  const std::size_t cells = n * m * n;
  std::vector<Index> t(cells, 0);
  std::size_t hits = 0;
  while (true) {
    hits += associative(n, m, t);
    std::size_t i = 0;
    while (i < cells && ++t[i] == n) t[i++] = 0;
    if (i == cells) return hits;
  }
}

/// Equivalence of raw pairs under the weak relation: same action on S.
inline bool same_left_action(const GammaSemigroup& s, Index x, Index a, Index y, Index b) {
  for (Index t = 0; t < s.s_size(); ++t)
    if (s.product(x, a, t) != s.product(y, b, t)) return false;
  return true;
}
inline bool same_right_action(const GammaSemigroup& s, Index a, Index x, Index b, Index y) {
  for (Index t = 0; t < s.s_size(); ++t)
    if (s.product(t, a, x) != s.product(t, b, y)) return false;
  return true;
}

inline bool left_ideal_s(const GammaSemigroup& s, const std::vector<bool>& p) {
  for (Index x = 0; x < s.s_size(); ++x)
    for (Index g = 0; g < s.g_size(); ++g)
      for (Index y = 0; y < s.s_size(); ++y)
        if (p[y] && !p[s.product(x, g, y)]) return false;
  return true;
}
inline bool right_ideal_s(const GammaSemigroup& s, const std::vector<bool>& p) {
  for (Index x = 0; x < s.s_size(); ++x)
    for (Index g = 0; g < s.g_size(); ++g)
      for (Index y = 0; y < s.s_size(); ++y)
        if (p[x] && !p[s.product(x, g, y)]) return false;
  return true;
}
inline bool prime_s(const GammaSemigroup& s, const std::vector<bool>& p) {
  for (Index a = 0; a < s.s_size(); ++a)
    for (Index b = 0; b < s.s_size(); ++b) {
      bool inside = true;
      for (Index g = 0; g < s.g_size(); ++g) inside = inside && p[s.product(a, g, b)];
      if (inside && !p[a] && !p[b]) return false;
    }
  return true;
}

/// Membership vector of a crisp subset.
inline std::vector<bool> bits(const gsg::CrispSubset& p) {
  std::vector<bool> out(p.carrier_size());
  for (Index e = 0; e < out.size(); ++e) out[e] = p.contains(e);
  return out;
}

inline bool ifli_s(const GammaSemigroup& s, const gsg::IFSubset& a) {
  for (Index x = 0; x < s.s_size(); ++x)
    for (Index g = 0; g < s.g_size(); ++g)
      for (Index y = 0; y < s.s_size(); ++y) {
        Index z = s.product(x, g, y);
        if (a.mu(z) < a.mu(y) || a.nu(z) > a.nu(y)) return false;
      }
  return true;
}
inline bool ifri_s(const GammaSemigroup& s, const gsg::IFSubset& a) {
  for (Index x = 0; x < s.s_size(); ++x)
    for (Index g = 0; g < s.g_size(); ++g)
      for (Index y = 0; y < s.s_size(); ++y) {
        Index z = s.product(x, g, y);
        if (a.mu(z) < a.mu(x) || a.nu(z) > a.nu(x)) return false;
      }
  return true;
}

/// Every IFS on a carrier of size n with grades from `lattice`.
inline std::vector<gsg::IFSubset> all_ifs(gsg::Carrier c, std::size_t n, const std::vector<Grade>& lattice) {
  std::vector<std::pair<Grade, Grade>> pairs;
  for (const Grade& m : lattice)
    for (const Grade& v : lattice)
      if (sum_at_most_one(m, v)) pairs.emplace_back(m, v);
  std::vector<gsg::IFSubset> out;
  std::vector<std::size_t> digit(n, 0);
  while (true) {
    std::vector<Grade> mu(n), nu(n);
    for (Index i = 0; i < n; ++i) std::tie(mu[i], nu[i]) = pairs[digit[i]];
    out.emplace_back(c, std::move(mu), std::move(nu));
    std::size_t i = 0;
    while (i < n && ++digit[i] == pairs.size()) digit[i++] = 0;
    if (i == n) return out;
  }
}

inline std::vector<Grade> halves() { return {Grade::zero(), Grade(1, 2), Grade::one()}; }

}  // namespace oracle
