#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsg/core.hpp"
#include "gsg/error.hpp"

namespace gsg {

enum class InstanceFilter : unsigned {
  none = 0,
  commutative = 1u << 0,
  left_unity = 1u << 1,
  right_unity = 1u << 2,
  both_unities = (1u << 1) | (1u << 2),
};

constexpr InstanceFilter operator|(InstanceFilter a, InstanceFilter b) {
  return static_cast<InstanceFilter>(static_cast<unsigned>(a) | static_cast<unsigned>(b));
}
constexpr bool has_filter(InstanceFilter set, InstanceFilter f) {
  return (static_cast<unsigned>(set) & static_cast<unsigned>(f)) == static_cast<unsigned>(f);
}

/// Parses `commutative`, `has-left-unity`, `has-right-unity`, `has-both-unities`.
inline InstanceFilter parse_instance_filter(std::string_view name) {
  if (name == "commutative") return InstanceFilter::commutative;
  if (name == "has-left-unity") return InstanceFilter::left_unity;
  if (name == "has-right-unity") return InstanceFilter::right_unity;
  if (name == "has-both-unities") return InstanceFilter::both_unities;
  throw input_error("unknown filter '" + std::string(name) + "'");
}

inline bool passes(const GammaSemigroup& s, InstanceFilter filters) {
  if (has_filter(filters, InstanceFilter::commutative) && !is_commutative(s)) return false;
  if (has_filter(filters, InstanceFilter::left_unity) && !find_left_unity_pair(s)) return false;
  if (has_filter(filters, InstanceFilter::right_unity) && !find_right_unity_pair(s)) return false;
  return true;
}

struct EnumerationOptions {
  InstanceFilter filters = InstanceFilter::none;
  std::optional<std::size_t> limit;
};

struct EnumerationSummary {
  std::size_t count = 0;
  bool truncated = false;  // at least one further instance exists beyond the limit
};

namespace detail {

/// Backtracking fill of the product table, cells in file order (gamma, x, y),
/// values ascending, so instances come out in lexicographic order of the
/// flattened table as written in the text format.
class TableFiller {
 public:
  TableFiller(std::size_t n, std::size_t m) : n_(n), m_(m), cells_(n * m * n, kUnset) {}

  template <typename Visit>
  bool run(const EnumerationOptions& opts, EnumerationSummary& summary, Visit& visit) {
    return fill(0, opts, summary, visit);
  }

 private:
  static constexpr Index kUnset = static_cast<Index>(-1);

  // File order position -> storage index (x * m + gamma) * n + y.
  Index storage(std::size_t pos) const {
    Index gamma = pos / (n_ * n_);
    Index x = (pos / n_) % n_;
    Index y = pos % n_;
    return (x * m_ + gamma) * n_ + y;
  }
  Index at(Index x, Index g, Index y) const { return cells_[(x * m_ + g) * n_ + y]; }

  bool consistent(Index x0, Index g0, Index y0, bool commutative) const {
    if (commutative) {
      Index mirror = at(y0, g0, x0);
      if (mirror != kUnset && mirror != at(x0, g0, y0)) return false;
    }
    for (Index x = 0; x < n_; ++x)
      for (Index a = 0; a < m_; ++a)
        for (Index y = 0; y < n_; ++y) {
          Index xy = at(x, a, y);
          if (xy == kUnset) continue;
          for (Index b = 0; b < m_; ++b)
            for (Index z = 0; z < n_; ++z) {
              Index lhs = at(xy, b, z);
              if (lhs == kUnset) continue;
              Index yz = at(y, b, z);
              if (yz == kUnset) continue;
              Index rhs = at(x, a, yz);
              if (rhs != kUnset && rhs != lhs) return false;
            }
        }
    return true;
  }

  template <typename Visit>
  bool fill(std::size_t pos, const EnumerationOptions& opts, EnumerationSummary& summary,
            Visit& visit) {
    if (pos == cells_.size()) {
      GammaSemigroup s(n_, m_, cells_);
      if (!passes(s, opts.filters)) return true;
      if (opts.limit && summary.count == *opts.limit) {
        summary.truncated = true;
        return false;
      }
      ++summary.count;
      return visit(s);
    }
    Index idx = storage(pos);
    Index gamma = pos / (n_ * n_), x = (pos / n_) % n_, y = pos % n_;
    bool commutative = has_filter(opts.filters, InstanceFilter::commutative);
    for (Index v = 0; v < n_; ++v) {
      cells_[idx] = v;
      if (consistent(x, gamma, y, commutative) && !fill(pos + 1, opts, summary, visit)) {
        cells_[idx] = kUnset;
        return false;
      }
    }
    cells_[idx] = kUnset;
    return true;
  }

  std::size_t n_, m_;
  std::vector<Index> cells_;
};

}  // namespace detail

/// Streams every associative table on the given sizes that passes the filters.
/// `visit(const GammaSemigroup&)` returns false to stop early.
template <typename Visit>
EnumerationSummary for_each_gamma_semigroup(std::size_t s_size, std::size_t g_size,
                                            const EnumerationOptions& opts, Visit&& visit) {
  if (s_size == 0 || g_size == 0) throw input_error("enumeration sizes must be positive");
  EnumerationSummary summary;
  detail::TableFiller filler(s_size, g_size);
  filler.run(opts, summary, visit);
  return summary;
}

struct Enumeration {
  std::vector<GammaSemigroup> instances;
  bool truncated = false;
};

inline Enumeration enumerate(std::size_t s_size, std::size_t g_size,
                             const EnumerationOptions& opts = {}) {
  Enumeration out;
  auto summary = for_each_gamma_semigroup(s_size, g_size, opts, [&](const GammaSemigroup& s) {
    out.instances.push_back(s);
    return true;
  });
  out.truncated = summary.truncated;
  return out;
}

}  // namespace gsg
