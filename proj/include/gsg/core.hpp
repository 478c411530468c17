#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gsg/error.hpp"

namespace gsg {

using Index = std::size_t;

/// A finite Γ-semigroup: carrier S = {0..s_size-1}, operators Γ = {0..g_size-1},
/// and the ternary product x γ y stored densely.
///
/// The optional gamma table holds the Γ-valued product γ x α. Without it the
/// operator semigroups are built from the S-action alone.
class GammaSemigroup {
 public:
  GammaSemigroup() = default;

  /// `table[(x * g_size + gamma) * s_size + y]` is x gamma y.
  GammaSemigroup(std::size_t s_size, std::size_t g_size, std::vector<Index> table,
                 std::optional<std::vector<Index>> gamma_table = std::nullopt)
      : s_size_(s_size), g_size_(g_size), table_(std::move(table)),
        gamma_table_(std::move(gamma_table)) {
    if (s_size_ == 0) throw input_error("S must be nonempty");
    if (g_size_ == 0) throw input_error("Gamma must be nonempty");
    if (table_.size() != s_size_ * g_size_ * s_size_)
      throw input_error("product table has wrong size");
    for (std::size_t i = 0; i < table_.size(); ++i)
      if (table_[i] >= s_size_)
        throw input_error("product table entry " + std::to_string(i) + " out of range");
    if (gamma_table_) {
      if (gamma_table_->size() != g_size_ * s_size_ * g_size_)
        throw input_error("gamma table has wrong size");
      for (std::size_t i = 0; i < gamma_table_->size(); ++i)
        if ((*gamma_table_)[i] >= g_size_)
          throw input_error("gamma table entry " + std::to_string(i) + " out of range");
    }
  }

  /// Builds from a callable `f(x, gamma, y) -> Index`.
  template <typename F>
  static GammaSemigroup from_function(std::size_t s_size, std::size_t g_size, F&& f) {
    std::vector<Index> table(s_size * g_size * s_size);
    for (Index x = 0; x < s_size; ++x)
      for (Index g = 0; g < g_size; ++g)
        for (Index y = 0; y < s_size; ++y) table[(x * g_size + g) * s_size + y] = f(x, g, y);
    return GammaSemigroup(s_size, g_size, std::move(table));
  }

  std::size_t s_size() const noexcept { return s_size_; }
  std::size_t g_size() const noexcept { return g_size_; }

  Index product(Index x, Index gamma, Index y) const {
    return table_[(x * g_size_ + gamma) * s_size_ + y];
  }

  bool has_gamma_table() const noexcept { return gamma_table_.has_value(); }

  /// gamma x alpha; requires has_gamma_table().
  Index gamma_product(Index gamma, Index x, Index alpha) const {
    return (*gamma_table_)[(gamma * s_size_ + x) * g_size_ + alpha];
  }

  const std::vector<Index>& table() const noexcept { return table_; }
  const std::optional<std::vector<Index>>& gamma_table() const noexcept { return gamma_table_; }

  /// Presentation-only names; not part of equality.
  std::vector<std::string> s_labels;
  std::vector<std::string> g_labels;

  friend bool operator==(const GammaSemigroup& a, const GammaSemigroup& b) {
    return a.s_size_ == b.s_size_ && a.g_size_ == b.g_size_ && a.table_ == b.table_ &&
           a.gamma_table_ == b.gamma_table_;
  }

 private:
  std::size_t s_size_ = 0;
  std::size_t g_size_ = 0;
  std::vector<Index> table_;
  std::optional<std::vector<Index>> gamma_table_;
};

/// One failed axiom instance with the witness tuple and both evaluated sides.
struct Violation {
  std::string axiom;  // "associativity" or one of the mixed-associativity laws
  Index x = 0, y = 0, z = 0;
  Index alpha = 0, beta = 0;
  Index lhs = 0, rhs = 0;

  std::string describe() const {
    std::ostringstream os;
    os << axiom << " x=" << x << " alpha=" << alpha << " y=" << y << " beta=" << beta
       << " z=" << z << " lhs=" << lhs << " rhs=" << rhs;
    return os.str();
  }
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Checks (x a y) b z = x a (y b z) and, when a gamma table is present, the
/// mixed laws that make every alternating word of length five unambiguous:
///   x (a y b) z = (x a y) b z,
///   ((a x b) y c) = a (x b y) c = (a x (b y c)).
/// For the Γ-valued laws the fields (x, alpha, y, beta, z) hold (a, x, b, y, c).
inline ValidationReport validate(const GammaSemigroup& s) {
  ValidationReport report;
  const std::size_t n = s.s_size(), m = s.g_size();
  for (Index x = 0; x < n; ++x)
    for (Index a = 0; a < m; ++a)
      for (Index y = 0; y < n; ++y)
        for (Index b = 0; b < m; ++b)
          for (Index z = 0; z < n; ++z) {
            Index lhs = s.product(s.product(x, a, y), b, z);
            Index rhs = s.product(x, a, s.product(y, b, z));
            if (lhs != rhs) report.violations.push_back({"associativity", x, y, z, a, b, lhs, rhs});
            if (s.has_gamma_table()) {
              Index mid = s.product(x, s.gamma_product(a, y, b), z);
              if (mid != lhs)
                report.violations.push_back({"mixed-s", x, y, z, a, b, mid, lhs});
            }
          }
  if (s.has_gamma_table()) {
    for (Index a = 0; a < m; ++a)
      for (Index x = 0; x < n; ++x)
        for (Index b = 0; b < m; ++b)
          for (Index y = 0; y < n; ++y)
            for (Index c = 0; c < m; ++c) {
              Index left = s.gamma_product(s.gamma_product(a, x, b), y, c);
              Index middle = s.gamma_product(a, s.product(x, b, y), c);
              Index right = s.gamma_product(a, x, s.gamma_product(b, y, c));
              if (left != middle)
                report.violations.push_back({"mixed-gamma-left", a, b, c, x, y, left, middle});
              if (right != middle)
                report.violations.push_back({"mixed-gamma-right", a, b, c, x, y, right, middle});
            }
  }
  return report;
}

/// x gamma y == y gamma x for all x, y, gamma.
inline bool is_commutative(const GammaSemigroup& s) {
  for (Index g = 0; g < s.g_size(); ++g)
    for (Index x = 0; x < s.s_size(); ++x)
      for (Index y = x + 1; y < s.s_size(); ++y)
        if (s.product(x, g, y) != s.product(y, g, x)) return false;
  return true;
}

/// First (e, delta) in lexicographic order with e delta s = s for all s.
inline std::optional<std::pair<Index, Index>> find_left_unity_pair(const GammaSemigroup& s) {
  for (Index e = 0; e < s.s_size(); ++e)
    for (Index d = 0; d < s.g_size(); ++d) {
      bool ok = true;
      for (Index x = 0; x < s.s_size() && ok; ++x) ok = s.product(e, d, x) == x;
      if (ok) return std::pair{e, d};
    }
  return std::nullopt;
}

/// First (gamma, f) in lexicographic order with s gamma f = s for all s.
inline std::optional<std::pair<Index, Index>> find_right_unity_pair(const GammaSemigroup& s) {
  for (Index g = 0; g < s.g_size(); ++g)
    for (Index f = 0; f < s.s_size(); ++f) {
      bool ok = true;
      for (Index x = 0; x < s.s_size() && ok; ++x) ok = s.product(x, g, f) == x;
      if (ok) return std::pair{g, f};
    }
  return std::nullopt;
}

}  // namespace gsg
