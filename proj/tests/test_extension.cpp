#include <gtest/gtest.h>

#include "support.hpp"

using namespace gsg;

TEST(Extension, I2Examples) {
  GammaContext ctx(fixtures::i2());
  IFSubset a(Carrier::S, {Grade::one(), Grade(1, 2)}, {Grade::zero(), Grade(1, 4)});
  EXPECT_EQ(extend(a, 1, ctx), a);
  EXPECT_EQ(extend(a, 0, ctx), IFSubset::constant(Carrier::S, 2, Grade::one(), Grade::zero()));

  const OperatorSemigroup& l = ctx.left();
  Index zero = l.class_of(0, 0), one = l.class_of(1, 1);
  std::vector<Grade> mu(2), nu(2);
  mu[zero] = Grade(3, 4);
  nu[zero] = Grade(1, 4);
  mu[one] = Grade(1, 4);
  nu[one] = Grade(1, 2);
  IFSubset b(Carrier::L, mu, nu);
  EXPECT_EQ(extend_op(b, one, ctx), b);
  EXPECT_EQ(extend_op(b, zero, ctx), IFSubset::constant(Carrier::L, 2, Grade(3, 4), Grade(1, 4)));
}

TEST(Extension, MatchesPointwiseDefinition) {
  for (auto [n, m] : {std::pair{2, 1}, {2, 2}, {3, 1}})
    for (const GammaSemigroup& s : enumerate(n, m).instances) {
      GammaContext ctx(s);
      for (const IFSubset& a : oracle::all_ifs(Carrier::S, s.s_size(), oracle::halves()))
        for (Index x = 0; x < s.s_size(); ++x) {
          IFSubset e = extend(a, x, ctx);
          for (Index y = 0; y < s.s_size(); ++y) {
            Grade lo = Grade::one(), hi = Grade::zero();
            for (Index g = 0; g < s.g_size(); ++g) {
              lo = min(lo, a.mu(s.product(x, g, y)));
              hi = max(hi, a.nu(s.product(x, g, y)));
            }
            ASSERT_EQ(e.mu(y), lo);
            ASSERT_EQ(e.nu(y), hi);
          }
        }
    }
}

TEST(Extension, OfAnIdealContainsIt) {
  // A ideal: mu(x g y) >= mu(y), so every extension dominates A.
  for (const GammaSemigroup& s : enumerate(3, 1).instances) {
    GammaContext ctx(s);
    for (const IFSubset& a : oracle::all_ifs(Carrier::S, 3, oracle::halves())) {
      if (!ctx.classify(a).ifi) continue;
      for (Index x = 0; x < 3; ++x) ASSERT_TRUE(includes(a, extend(a, x, ctx)));
    }
  }
}

TEST(Extension, RejectsBadArguments) {
  GammaContext ctx(fixtures::i2());
  IFSubset a = IFSubset::constant(Carrier::S, 2, Grade::one(), Grade::zero());
  EXPECT_THROW(extend(a, 2, ctx), input_error);
  EXPECT_THROW(extend_op(a, 0, ctx), input_error);
  EXPECT_THROW(extend_op(IFSubset::constant(Carrier::R, 2, Grade::one(), Grade::zero()), 5, ctx), input_error);
}
