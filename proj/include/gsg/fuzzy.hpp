#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "gsg/core.hpp"
#include "gsg/error.hpp"
#include "gsg/grade.hpp"
#include "gsg/subset.hpp"

namespace gsg {

/// Membership grades that occur in A, plus 0 and 1, ascending and distinct.
inline std::vector<Grade> thresholds(const IFSubset& a) {
  std::vector<Grade> t{Grade::zero(), Grade::one()};
  t.insert(t.end(), a.mu().begin(), a.mu().end());
  t.insert(t.end(), a.nu().begin(), a.nu().end());
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

struct LevelSets {
  CrispSubset upper;  // {x : mu(x) >= t}
  CrispSubset lower;  // {x : nu(x) <= t}
};

inline LevelSets level_sets(const IFSubset& a, const Grade& t) {
  LevelSets out{CrispSubset(a.carrier(), a.carrier_size()), CrispSubset(a.carrier(), a.carrier_size())};
  for (Index i = 0; i < a.carrier_size(); ++i) {
    if (a.mu(i) >= t) out.upper.insert(i);
    if (a.nu(i) <= t) out.lower.insert(i);
  }
  return out;
}


/// (chi_I, 1 - chi_I): membership 1 on I, non-membership 1 off I.
inline IFSubset characteristic_pair(const CrispSubset& i) {
  std::vector<Grade> mu(i.carrier_size()), nu(i.carrier_size());
  for (Index e = 0; e < i.carrier_size(); ++e) {
    mu[e] = i.contains(e) ? Grade::one() : Grade::zero();
    nu[e] = i.contains(e) ? Grade::zero() : Grade::one();
  }
  return IFSubset(i.carrier(), std::move(mu), std::move(nu));
}

/// Pointwise min of memberships and max of non-memberships.
inline IFSubset inf_family(const std::vector<IFSubset>& family) {
  if (family.empty()) throw input_error("inf of an empty family");
  std::vector<Grade> mu = family.front().mu();
  std::vector<Grade> nu = family.front().nu();
  for (const IFSubset& a : family) {
    require_same_carrier(a, family.front());
    for (Index e = 0; e < mu.size(); ++e) {
      mu[e] = min(mu[e], a.mu(e));
      nu[e] = max(nu[e], a.nu(e));
    }
  }
  return IFSubset(family.front().carrier(), std::move(mu), std::move(nu));
}

/// A is contained in B: mu_A <= mu_B and nu_A >= nu_B pointwise.
inline bool includes(const IFSubset& a, const IFSubset& b) {
  require_same_carrier(a, b);
  for (Index e = 0; e < a.carrier_size(); ++e)
    if (a.mu(e) > b.mu(e) || a.nu(e) < b.nu(e)) return false;
  return true;
}

}  // namespace gsg
