#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gsg/core.hpp"
#include "gsg/error.hpp"

namespace gsg {

enum class Side { left, right };

inline const char* to_string(Side side) { return side == Side::left ? "left" : "right"; }

/// A raw pair of the quotient. For the left operator semigroup it is
/// (element, operator); for the right one it is (operator, element).
struct RawPair {
  Index first = 0;
  Index second = 0;
  friend bool operator==(const RawPair&, const RawPair&) = default;
  friend auto operator<=>(const RawPair&, const RawPair&) = default;
};

/// Left (S x Γ / ρ) or right (Γ x S / ρ) operator semigroup of a Γ-semigroup.
///
/// ρ relates two pairs when they act identically on S; if the source carries a
/// gamma table, agreement of the Γ-valued products is required as well.
/// Products: [x,a][y,b] = [x a y, b] on the left, [a,x][b,y] = [a, x b y] on
/// the right.
class OperatorSemigroup {
 public:
  OperatorSemigroup() = default;

  Side side() const noexcept { return side_; }
  std::size_t size() const noexcept { return representative_.size(); }
  std::size_t class_count() const noexcept { return size(); }

  /// True when ρ also compared gamma-table products.
  bool strong_relation() const noexcept { return strong_; }

  Index class_of(RawPair p) const { return class_of_[p.first * second_extent_ + p.second]; }
  Index class_of(Index first, Index second) const { return class_of({first, second}); }

  const RawPair& representative(Index k) const { return representative_[k]; }
  const std::vector<RawPair>& members(Index k) const { return members_[k]; }

  Index multiply(Index a, Index b) const { return cayley_[a * size() + b]; }
  const std::vector<Index>& cayley() const noexcept { return cayley_; }

  /// `[rep0,rep1]#k`
  std::string label(Index k) const {
    std::ostringstream os;
    os << '[' << representative_[k].first << ',' << representative_[k].second << "]#" << k;
    return os.str();
  }

  friend OperatorSemigroup build_operator(const GammaSemigroup& s, Side side);

 private:
  Side side_ = Side::left;
  bool strong_ = false;
  std::size_t second_extent_ = 0;
  std::vector<Index> class_of_;
  std::vector<RawPair> representative_;
  std::vector<std::vector<RawPair>> members_;
  std::vector<Index> cayley_;
};

namespace detail {

inline std::vector<Index> rho_signature(const GammaSemigroup& s, Side side, RawPair p) {
  std::vector<Index> sig;
  sig.reserve(s.s_size() + s.g_size());
  if (side == Side::left) {
    for (Index t = 0; t < s.s_size(); ++t) sig.push_back(s.product(p.first, p.second, t));
    if (s.has_gamma_table())
      for (Index g = 0; g < s.g_size(); ++g) sig.push_back(s.gamma_product(g, p.first, p.second));
  } else {
    for (Index t = 0; t < s.s_size(); ++t) sig.push_back(s.product(t, p.first, p.second));
    if (s.has_gamma_table())
      for (Index g = 0; g < s.g_size(); ++g) sig.push_back(s.gamma_product(p.first, p.second, g));
  }
  return sig;
}

inline RawPair raw_product(const GammaSemigroup& s, Side side, RawPair p, RawPair q) {
  if (side == Side::left) return {s.product(p.first, p.second, q.first), q.second};
  return {p.first, s.product(p.second, q.first, q.second)};
}

}  // namespace detail

/// Builds the quotient and its Cayley table, re-checking that the product does
/// not depend on the chosen representatives.
inline OperatorSemigroup build_operator(const GammaSemigroup& s, Side side) {
  OperatorSemigroup op;
  op.side_ = side;
  op.strong_ = s.has_gamma_table();
  const std::size_t first_extent = side == Side::left ? s.s_size() : s.g_size();
  op.second_extent_ = side == Side::left ? s.g_size() : s.s_size();
  op.class_of_.assign(first_extent * op.second_extent_, 0);

  std::map<std::vector<Index>, Index> classes;
  for (Index a = 0; a < first_extent; ++a)
    for (Index b = 0; b < op.second_extent_; ++b) {
      RawPair p{a, b};
      auto [it, inserted] = classes.emplace(detail::rho_signature(s, side, p), op.representative_.size());
      if (inserted) {
        op.representative_.push_back(p);
        op.members_.emplace_back();
      }
      op.class_of_[a * op.second_extent_ + b] = it->second;
      op.members_[it->second].push_back(p);
    }

  const std::size_t k = op.representative_.size();
  op.cayley_.assign(k * k, 0);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j) {
      Index expected = op.class_of(detail::raw_product(s, side, op.representative_[i], op.representative_[j]));
      op.cayley_[i * k + j] = expected;
      for (const RawPair& p : op.members_[i])
        for (const RawPair& q : op.members_[j]) {
          Index got = op.class_of(detail::raw_product(s, side, p, q));
          if (got != expected) {
            std::ostringstream os;
            os << to_string(side) << " operator product not well defined: [" << p.first << ','
               << p.second << "][" << q.first << ',' << q.second << "] lands in class " << got
               << ", representatives give " << expected;
            throw construction_error(os.str());
          }
        }
    }
  return op;
}

/// Unities of S, as classes of the operator semigroups they live in.
struct Unities {
  std::optional<RawPair> left_pair;   // (e, delta) with e delta s = s
  std::optional<RawPair> right_pair;  // (gamma, f) with s gamma f = s
  std::optional<Index> left_unity;    // class of left_pair in L
  std::optional<Index> right_unity;   // class of right_pair in R

  bool both() const noexcept { return left_unity.has_value() && right_unity.has_value(); }
};

inline Unities find_unities(const GammaSemigroup& s, const OperatorSemigroup& left,
                            const OperatorSemigroup& right) {
  Unities u;
  if (auto p = find_left_unity_pair(s)) {
    u.left_pair = RawPair{p->first, p->second};
    u.left_unity = left.class_of(*u.left_pair);
  }
  if (auto p = find_right_unity_pair(s)) {
    u.right_pair = RawPair{p->first, p->second};
    u.right_unity = right.class_of(*u.right_pair);
  }
  return u;
}

inline Unities find_unities(const GammaSemigroup& s) {
  return find_unities(s, build_operator(s, Side::left), build_operator(s, Side::right));
}

}  // namespace gsg
