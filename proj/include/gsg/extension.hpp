#pragma once

#include <vector>

#include "gsg/context.hpp"
#include "gsg/error.hpp"
#include "gsg/grade.hpp"
#include "gsg/subset.hpp"

namespace gsg {

/// Extension of A over S by x: y |-> (min over gamma of mu(x gamma y),
/// max over gamma of nu(x gamma y)).
inline IFSubset extend(const IFSubset& a, Index x, const GammaContext& ctx) {
  ctx.require_on(a, Carrier::S);
  const GammaSemigroup& s = ctx.semigroup();
  if (x >= s.s_size()) throw input_error("extension element " + std::to_string(x) + " outside S");
  std::vector<Grade> mu(s.s_size()), nu(s.s_size());
  for (Index y = 0; y < s.s_size(); ++y) {
    Index first = s.product(x, 0, y);
    Grade lo = a.mu(first), hi = a.nu(first);
    for (Index g = 1; g < s.g_size(); ++g) {
      Index z = s.product(x, g, y);
      lo = min(lo, a.mu(z));
      hi = max(hi, a.nu(z));
    }
    mu[y] = lo;
    nu[y] = hi;
  }
  return IFSubset(Carrier::S, std::move(mu), std::move(nu));
}

/// Extension of B over an operator semigroup by the class r: q |-> B(r q).
inline IFSubset extend_op(const IFSubset& b, Index r, const GammaContext& ctx) {
  if (b.carrier() == Carrier::S) throw input_error("operator extension needs a subset of L or R");
  ctx.require_on(b, b.carrier());
  const OperatorSemigroup& t = b.carrier() == Carrier::L ? ctx.left() : ctx.right();
  if (r >= t.size()) throw input_error("extension class " + std::to_string(r) + " out of range");
  std::vector<Grade> mu(t.size()), nu(t.size());
  for (Index q = 0; q < t.size(); ++q) {
    mu[q] = b.mu(t.multiply(r, q));
    nu[q] = b.nu(t.multiply(r, q));
  }
  return IFSubset(b.carrier(), std::move(mu), std::move(nu));
}

}  // namespace gsg
