#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gsg/core.hpp"
#include "gsg/fuzzy.hpp"
#include "gsg/grade.hpp"
#include "gsg/operator.hpp"
#include "gsg/subset.hpp"

namespace gsg {

/// One product `left · middle · right = result`. For binary carriers built as
/// one-sided multiples `middle` is kNoMiddle.
struct Term {
  static constexpr Index kNoMiddle = static_cast<Index>(-1);
  Index left = 0;
  Index middle = kNoMiddle;
  Index right = 0;
  Index result = 0;
};

/// The products an ideal has to absorb, precomputed for one carrier.
///
/// On S: left multiples of p are s γ p, right multiples p γ s, and the
/// sandwich of (a, b) is a Γ b. On an operator semigroup T: t p, p t, and
/// a T b. Primeness is "sandwich(a, b) inside P forces a or b into P" in
/// both cases.
class ProductView {
 public:
  static ProductView of(const GammaSemigroup& s) {
    ProductView v(s.s_size(), false);
    const std::size_t n = s.s_size();
    for (Index p = 0; p < n; ++p)
      for (Index t = 0; t < n; ++t)
        for (Index g = 0; g < s.g_size(); ++g) {
          v.left_[p].push_back({t, g, p, s.product(t, g, p)});
          v.right_[p].push_back({p, g, t, s.product(p, g, t)});
        }
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index g = 0; g < s.g_size(); ++g) v.sandwich_[a * n + b].push_back({a, g, b, s.product(a, g, b)});
    return v;
  }

  static ProductView of(const OperatorSemigroup& t) {
    ProductView v(t.size(), true);
    const std::size_t n = t.size();
    for (Index p = 0; p < n; ++p)
      for (Index q = 0; q < n; ++q) {
        v.left_[p].push_back({q, Term::kNoMiddle, p, t.multiply(q, p)});
        v.right_[p].push_back({p, Term::kNoMiddle, q, t.multiply(p, q)});
      }
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index r = 0; r < n; ++r)
          v.sandwich_[a * n + b].push_back({a, r, b, t.multiply(t.multiply(a, r), b)});
    return v;
  }

  std::size_t size() const noexcept { return n_; }
  bool binary() const noexcept { return binary_; }

  const std::vector<Term>& left_multiples(Index p) const { return left_[p]; }
  const std::vector<Term>& right_multiples(Index p) const { return right_[p]; }
  const std::vector<Term>& sandwich(Index a, Index b) const { return sandwich_[a * n_ + b]; }

  std::string describe(const Term& t) const {
    std::ostringstream os;
    if (t.middle == Term::kNoMiddle)
      os << t.left << "*" << t.right;
    else if (binary_)
      os << t.left << "*" << t.middle << "*" << t.right;
    else
      os << t.left << " g" << t.middle << " " << t.right;
    os << "=" << t.result;
    return os.str();
  }

 private:
  ProductView(std::size_t n, bool binary)
      : n_(n), binary_(binary), left_(n), right_(n), sandwich_(n * n) {}

  std::size_t n_;
  bool binary_;
  std::vector<std::vector<Term>> left_;
  std::vector<std::vector<Term>> right_;
  std::vector<std::vector<Term>> sandwich_;
};

struct CrispFlags {
  bool empty = false;
  bool left_ideal = false;
  bool right_ideal = false;
  bool ideal = false;
  bool prime = false;
  bool semiprime = false;
};

namespace detail {

inline std::optional<Term> first_escape(const CrispSubset& p, const ProductView& v, bool left) {
  for (Index e = 0; e < v.size(); ++e) {
    if (!p.contains(e)) continue;
    for (const Term& t : left ? v.left_multiples(e) : v.right_multiples(e))
      if (!p.contains(t.result)) return t;
  }
  return std::nullopt;
}

inline bool sandwich_inside(const CrispSubset& p, const ProductView& v, Index a, Index b) {
  for (const Term& t : v.sandwich(a, b))
    if (!p.contains(t.result)) return false;
  return true;
}

inline std::optional<std::pair<Index, Index>> first_prime_failure(const CrispSubset& p, const ProductView& v) {
  for (Index a = 0; a < v.size(); ++a) {
    if (p.contains(a)) continue;
    for (Index b = 0; b < v.size(); ++b)
      if (!p.contains(b) && sandwich_inside(p, v, a, b)) return std::pair{a, b};
  }
  return std::nullopt;
}

inline std::optional<Index> first_semiprime_failure(const CrispSubset& p, const ProductView& v) {
  for (Index a = 0; a < v.size(); ++a)
    if (!p.contains(a) && sandwich_inside(p, v, a, a)) return a;
  return std::nullopt;
}

}  // namespace detail

/// Ideal, prime and semiprime flags of a crisp subset. The empty set is an
/// ideal vacuously and carries the `empty` flag so callers can exclude it.
inline CrispFlags classify_crisp(const CrispSubset& p, const ProductView& v) {
  if (p.carrier_size() != v.size()) throw input_error("subset size does not match carrier");
  CrispFlags f;
  f.empty = p.empty();
  f.left_ideal = !detail::first_escape(p, v, true);
  f.right_ideal = !detail::first_escape(p, v, false);
  f.ideal = f.left_ideal && f.right_ideal;
  f.prime = f.ideal && !detail::first_prime_failure(p, v);
  f.semiprime = f.ideal && !detail::first_semiprime_failure(p, v);
  return f;
}

struct FuzzyFlags {
  bool ifli = false;
  bool ifri = false;
  bool ifi = false;
  bool ifpi = false;
  bool ifspi = false;
};

namespace detail {

inline std::optional<Term> fuzzy_escape(const IFSubset& a, const ProductView& v, bool left) {
  for (Index e = 0; e < v.size(); ++e)
    for (const Term& t : left ? v.left_multiples(e) : v.right_multiples(e))
      if (a.mu(t.result) < a.mu(e) || a.nu(t.result) > a.nu(e)) return t;
  return std::nullopt;
}

inline std::optional<std::pair<Index, Index>> fuzzy_prime_failure(const IFSubset& a, const ProductView& v) {
  for (Index x = 0; x < v.size(); ++x)
    for (Index y = 0; y < v.size(); ++y) {
      const auto& terms = v.sandwich(x, y);
      Grade lo = a.mu(terms.front().result);
      Grade hi = a.nu(terms.front().result);
      for (const Term& t : terms) {
        lo = min(lo, a.mu(t.result));
        hi = max(hi, a.nu(t.result));
      }
      if (lo != max(a.mu(x), a.mu(y)) || hi != min(a.nu(x), a.nu(y))) return std::pair{x, y};
    }
  return std::nullopt;
}

inline std::optional<Grade> fuzzy_semiprime_level_failure(const IFSubset& a, const ProductView& v) {
  for (const Grade& t : thresholds(a)) {
    LevelSets ls = level_sets(a, t);
    if (!ls.upper.empty() && !classify_crisp(ls.upper, v).semiprime) return t;
    if (!ls.lower.empty() && !classify_crisp(ls.lower, v).semiprime) return t;
  }
  return std::nullopt;
}

}  // namespace detail

/// Intuitionistic fuzzy ideal flags.
///
/// IFLI: mu(product) >= mu(p) and nu(product) <= nu(p) over left multiples of
/// p (IFRI dually). IFPI: IFI and, for all a, b, the minimum of mu over the
/// sandwich of (a, b) is max{mu(a), mu(b)} and the maximum of nu is
/// min{nu(a), nu(b)}. IFSPI: IFI and every nonempty level set is semiprime.
inline FuzzyFlags classify_fuzzy(const IFSubset& a, const ProductView& v) {
  if (a.carrier_size() != v.size()) throw input_error("subset size does not match carrier");
  FuzzyFlags f;
  f.ifli = !detail::fuzzy_escape(a, v, true);
  f.ifri = !detail::fuzzy_escape(a, v, false);
  f.ifi = f.ifli && f.ifri;
  if (f.ifi) {
    f.ifpi = !detail::fuzzy_prime_failure(a, v);
    f.ifspi = !detail::fuzzy_semiprime_level_failure(a, v);
  }
  return f;
}

/// Pointwise form of semiprimeness: mu(x) >= min mu(x ? x) and
/// nu(x) <= max nu(x ? x) over the sandwich of (x, x). Equivalent to the
/// level-set definition for fuzzy ideals.
inline bool fuzzy_semiprime_pointwise(const IFSubset& a, const ProductView& v) {
  for (Index x = 0; x < v.size(); ++x) {
    const auto& terms = v.sandwich(x, x);
    Grade lo = a.mu(terms.front().result);
    Grade hi = a.nu(terms.front().result);
    for (const Term& t : terms) {
      lo = min(lo, a.mu(t.result));
      hi = max(hi, a.nu(t.result));
    }
    if (a.mu(x) < lo || a.nu(x) > hi) return false;
  }
  return true;
}

/// Predicate names accepted by explain_crisp / explain_fuzzy.
inline const std::vector<std::string>& crisp_predicates() {
  static const std::vector<std::string> names{"left-ideal", "right-ideal", "ideal", "prime", "semiprime"};
  return names;
}
inline const std::vector<std::string>& fuzzy_predicates() {
  static const std::vector<std::string> names{"ifli", "ifri", "ifi", "ifpi", "ifspi"};
  return names;
}

/// Evaluates one crisp predicate and, when false, names a violating product.
inline std::pair<bool, std::string> explain_crisp(const CrispSubset& p, const ProductView& v,
                                                  const std::string& predicate) {
  const auto& names = crisp_predicates();
  if (std::find(names.begin(), names.end(), predicate) == names.end())
    throw input_error("unknown crisp predicate '" + predicate + "'");
  auto escape = [&](bool left) -> std::optional<std::string> {
    if (auto t = detail::first_escape(p, v, left)) return "product " + v.describe(*t) + " leaves the set";
    return std::nullopt;
  };
  if (predicate == "left-ideal" || predicate == "right-ideal") {
    if (auto w = escape(predicate == "left-ideal")) return {false, *w};
    return {true, ""};
  }
  for (bool left : {true, false})
    if (auto w = escape(left)) return {false, *w};
  if (predicate == "ideal") return {true, ""};
  if (predicate == "prime") {
    if (auto f = detail::first_prime_failure(p, v))
      return {false, "sandwich of " + std::to_string(f->first) + " and " + std::to_string(f->second) +
                         " lies inside but neither element does"};
    return {true, ""};
  }
  if (predicate == "semiprime") {
    if (auto f = detail::first_semiprime_failure(p, v))
      return {false, "sandwich of " + std::to_string(*f) + " with itself lies inside but the element does not"};
    return {true, ""};
  }
  return {true, ""};
}

inline std::pair<bool, std::string> explain_fuzzy(const IFSubset& a, const ProductView& v,
                                                  const std::string& predicate) {
  const auto& names = fuzzy_predicates();
  if (std::find(names.begin(), names.end(), predicate) == names.end())
    throw input_error("unknown fuzzy predicate '" + predicate + "'");
  auto escape = [&](bool left) -> std::optional<std::string> {
    if (auto t = detail::fuzzy_escape(a, v, left)) {
      Index base = left ? t->right : t->left;
      std::ostringstream os;
      os << "witness " << v.describe(*t) << ": grades (" << a.mu(t->result) << "," << a.nu(t->result)
         << ") against (" << a.mu(base) << "," << a.nu(base) << ") at " << base;
      return os.str();
    }
    return std::nullopt;
  };
  if (predicate == "ifli" || predicate == "ifri") {
    if (auto w = escape(predicate == "ifli")) return {false, *w};
    return {true, ""};
  }
  for (bool left : {true, false})
    if (auto w = escape(left)) return {false, *w};
  if (predicate == "ifi") return {true, ""};
  if (predicate == "ifpi") {
    if (auto f = detail::fuzzy_prime_failure(a, v))
      return {false, "sandwich of " + std::to_string(f->first) + " and " + std::to_string(f->second) +
                         " does not attain max{mu}/min{nu}"};
    return {true, ""};
  }
  if (predicate == "ifspi") {
    if (auto t = detail::fuzzy_semiprime_level_failure(a, v))
      return {false, "a level set at t=" + t->str() + " is not semiprime"};
    return {true, ""};
  }
  return {true, ""};
}

}  // namespace gsg
