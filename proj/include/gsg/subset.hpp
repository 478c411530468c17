#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gsg/core.hpp"
#include "gsg/error.hpp"
#include "gsg/grade.hpp"

namespace gsg {

/// Which carrier a subset lives on: the Γ-semigroup itself or one of its
/// operator semigroups.
enum class Carrier { S, L, R };

inline const char* to_string(Carrier c) {
  switch (c) {
    case Carrier::S: return "S";
    case Carrier::L: return "L";
    case Carrier::R: return "R";
  }
  return "?";
}

inline Carrier parse_carrier(std::string_view text) {
  if (text == "S") return Carrier::S;
  if (text == "L") return Carrier::L;
  if (text == "R") return Carrier::R;
  throw input_error("unknown carrier '" + std::string(text) + "'");
}

class CrispSubset {
 public:
  CrispSubset() = default;
  CrispSubset(Carrier carrier, std::size_t size) : carrier_(carrier), members_(size, false) {}
  CrispSubset(Carrier carrier, std::size_t size, const std::vector<Index>& elements)
      : CrispSubset(carrier, size) {
    for (Index e : elements) insert(e);
  }

  static CrispSubset full(Carrier carrier, std::size_t size) {
    CrispSubset out(carrier, size);
    out.members_.assign(size, true);
    return out;
  }

  /// Subset whose members are the set bits of `mask`.
  static CrispSubset from_mask(Carrier carrier, std::size_t size, unsigned long long mask) {
    CrispSubset out(carrier, size);
    for (Index i = 0; i < size; ++i) out.members_[i] = (mask >> i) & 1ULL;
    return out;
  }

  Carrier carrier() const noexcept { return carrier_; }
  std::size_t carrier_size() const noexcept { return members_.size(); }

  bool contains(Index e) const { return members_[e]; }
  void insert(Index e) {
    if (e >= members_.size())
      throw input_error("element " + std::to_string(e) + " outside carrier of size " +
                        std::to_string(members_.size()));
    members_[e] = true;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (bool b : members_) c += b;
    return c;
  }
  bool empty() const { return count() == 0; }
  bool is_full() const { return count() == members_.size(); }

  std::vector<Index> elements() const {
    std::vector<Index> out;
    for (Index i = 0; i < members_.size(); ++i)
      if (members_[i]) out.push_back(i);
    return out;
  }

  bool subset_of(const CrispSubset& other) const {
    for (Index i = 0; i < members_.size(); ++i)
      if (members_[i] && !other.members_[i]) return false;
    return true;
  }

  friend CrispSubset intersect(const CrispSubset& a, const CrispSubset& b) {
    if (a.carrier_ != b.carrier_ || a.carrier_size() != b.carrier_size())
      throw input_error("intersection of subsets on different carriers");
    CrispSubset out(a.carrier_, a.carrier_size());
    for (Index i = 0; i < a.members_.size(); ++i) out.members_[i] = a.members_[i] && b.members_[i];
    return out;
  }

  /// `{0,2}`
  std::string str() const {
    std::string out = "{";
    bool first = true;
    for (Index e : elements()) {
      if (!first) out += ',';
      out += std::to_string(e);
      first = false;
    }
    return out + "}";
  }

  friend bool operator==(const CrispSubset&, const CrispSubset&) = default;

 private:
  Carrier carrier_ = Carrier::S;
  std::vector<bool> members_;
};

/// Intuitionistic fuzzy subset: membership mu and non-membership nu with
/// mu(x) + nu(x) <= 1 everywhere.
class IFSubset {
 public:
  IFSubset() = default;
  IFSubset(Carrier carrier, std::vector<Grade> mu, std::vector<Grade> nu)
      : carrier_(carrier), mu_(std::move(mu)), nu_(std::move(nu)) {
    if (mu_.size() != nu_.size()) throw input_error("mu and nu have different lengths");
    for (Index i = 0; i < mu_.size(); ++i)
      if (!sum_at_most_one(mu_[i], nu_[i]))
        throw input_error("element " + std::to_string(i) + ": mu + nu exceeds 1 (" +
                          mu_[i].str() + " + " + nu_[i].str() + ")");
  }

  static IFSubset constant(Carrier carrier, std::size_t size, Grade mu, Grade nu) {
    return IFSubset(carrier, std::vector<Grade>(size, mu), std::vector<Grade>(size, nu));
  }

  Carrier carrier() const noexcept { return carrier_; }
  std::size_t carrier_size() const noexcept { return mu_.size(); }

  const Grade& mu(Index i) const { return mu_[i]; }
  const Grade& nu(Index i) const { return nu_[i]; }
  const std::vector<Grade>& mu() const noexcept { return mu_; }
  const std::vector<Grade>& nu() const noexcept { return nu_; }

  std::string str() const {
    std::string out;
    for (Index i = 0; i < mu_.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(i) + ":(" + mu_[i].str() + "," + nu_[i].str() + ")";
    }
    return out;
  }

  friend bool operator==(const IFSubset&, const IFSubset&) = default;

 private:
  Carrier carrier_ = Carrier::S;
  std::vector<Grade> mu_;
  std::vector<Grade> nu_;
};

inline void require_same_carrier(const IFSubset& a, const IFSubset& b) {
  if (a.carrier() != b.carrier() || a.carrier_size() != b.carrier_size())
    throw input_error(std::string("carrier mismatch: ") + to_string(a.carrier()) + " vs " +
                      to_string(b.carrier()));
}

}  // namespace gsg
