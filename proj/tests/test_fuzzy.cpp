#include <gtest/gtest.h>

#include "support.hpp"

using namespace gsg;

namespace {

Grade g(std::int64_t p, std::int64_t q) { return Grade(p, q); }

IFSubset ifs(Carrier c, std::vector<Grade> mu, std::vector<Grade> nu) {
  return IFSubset(c, std::move(mu), std::move(nu));
}

std::vector<GammaContext> contexts() {
  std::vector<GammaContext> out;
  for (auto [s, m] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}})
    for (GammaSemigroup& inst : enumerate(s, m).instances) out.emplace_back(std::move(inst));
  return out;
}

/// Thresholds plus every quarter, so levels strictly between grades are hit too.
std::vector<Grade> probe_levels(const IFSubset& a) {
  std::vector<Grade> t = thresholds(a);
  for (int i = 0; i <= 4; ++i) t.push_back(g(i, 4));
  return t;
}

}  // namespace

TEST(Grades, ParseAndPrintCanonically) {
  EXPECT_EQ(Grade::parse("2/4").str(), "1/2");
  EXPECT_EQ(Grade::parse("1").str(), "1");
  EXPECT_EQ(Grade::parse("0/7").str(), "0");
  EXPECT_THROW(Grade::parse("3/2"), input_error);
  EXPECT_THROW(Grade::parse("-1/2"), input_error);
  EXPECT_THROW(Grade::parse("1/0"), input_error);
  EXPECT_THROW(Grade::parse("0.5"), input_error);
  EXPECT_THROW(Grade::parse(""), input_error);
  EXPECT_TRUE(sum_at_most_one(g(1, 3), g(2, 3)));
  EXPECT_FALSE(sum_at_most_one(g(1, 2), g(2, 3)));
  EXPECT_EQ(min(g(1, 3), g(1, 2)), g(1, 3));
  EXPECT_EQ(max(g(1, 3), g(1, 2)), g(1, 2));
}

TEST(Subsets, RejectBadGrades) {
  EXPECT_THROW(ifs(Carrier::S, {g(3, 4)}, {g(1, 2)}), input_error);
  EXPECT_THROW(ifs(Carrier::S, {g(1, 4)}, {}), input_error);
}

TEST(LevelSets, Example) {
  IFSubset a = ifs(Carrier::S, {Grade::one(), g(1, 2), Grade::zero()}, {Grade::zero(), g(1, 4), g(3, 4)});
  LevelSets half = level_sets(a, g(1, 2));
  EXPECT_EQ(half.upper, CrispSubset(Carrier::S, 3, {0, 1}));
  EXPECT_EQ(half.lower, CrispSubset(Carrier::S, 3, {0, 1}));
  LevelSets zero = level_sets(a, Grade::zero());
  EXPECT_TRUE(zero.upper.is_full());
  EXPECT_EQ(zero.lower, CrispSubset(Carrier::S, 3, {0}));
  std::vector<Grade> expected{Grade::zero(), g(1, 4), g(1, 2), g(3, 4), Grade::one()};
  EXPECT_EQ(thresholds(a), expected);
}

TEST(LevelSets, ConstantBetweenThresholds) {
  for (const IFSubset& a : oracle::all_ifs(Carrier::S, 3, {Grade::zero(), g(1, 3), g(1, 2), Grade::one()})) {
    std::vector<Grade> t = thresholds(a);
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      Grade mid(t[i].numerator() * t[i + 1].denominator() + t[i + 1].numerator() * t[i].denominator(),
                2 * t[i].denominator() * t[i + 1].denominator());
      // Upper sets only change when t passes a grade from below, lower sets from above.
      EXPECT_EQ(level_sets(a, mid).upper, level_sets(a, t[i + 1]).upper);
      EXPECT_EQ(level_sets(a, mid).lower, level_sets(a, t[i]).lower);
    }
  }
}

TEST(Classify, I2Examples) {
  GammaContext ctx(fixtures::i2());
  FuzzyFlags f = ctx.classify(ifs(Carrier::S, {Grade::one(), g(1, 2)}, {Grade::zero(), g(1, 4)}));
  EXPECT_TRUE(f.ifi);
  EXPECT_TRUE(f.ifpi);
  EXPECT_TRUE(f.ifspi);
  // Larger membership on 1 than on 0 cannot absorb 1 g 0 = 0.
  FuzzyFlags h = ctx.classify(ifs(Carrier::S, {g(1, 4), Grade::one()}, {Grade::zero(), Grade::zero()}));
  EXPECT_FALSE(h.ifli);
  EXPECT_FALSE(h.ifri);
  EXPECT_FALSE(h.ifpi);

  CrispFlags zero = ctx.classify(CrispSubset(Carrier::S, 2, {0}));
  EXPECT_TRUE(zero.ideal);
  EXPECT_TRUE(zero.prime);
  CrispFlags one = ctx.classify(CrispSubset(Carrier::S, 2, {1}));
  EXPECT_FALSE(one.left_ideal);
  EXPECT_TRUE(ctx.classify(CrispSubset(Carrier::S, 2)).empty);
}

TEST(Classify, LeftZeroExamples) {
  GammaContext ctx(fixtures::left_zero());
  IFSubset a = ifs(Carrier::S, {Grade::one(), Grade::zero()}, {Grade::zero(), Grade::one()});
  FuzzyFlags f = ctx.classify(a);
  EXPECT_FALSE(f.ifli);
  EXPECT_TRUE(f.ifri);
  auto [ok, why] = explain_fuzzy(a, ctx.view(Carrier::S), "ifli");
  EXPECT_FALSE(ok);
  EXPECT_NE(why.find("witness"), std::string::npos);
  EXPECT_TRUE(ctx.classify(CrispSubset(Carrier::S, 2, {0})).right_ideal);
  EXPECT_FALSE(ctx.classify(CrispSubset(Carrier::S, 2, {0})).left_ideal);
  EXPECT_THROW(explain_fuzzy(a, ctx.view(Carrier::S), "ideal"), input_error);
}

TEST(Classify, CrispFlagsMatchRawOracle) {
  for (const GammaContext& ctx : contexts()) {
    const GammaSemigroup& s = ctx.semigroup();
    for (unsigned long long mask = 0; mask < (1ULL << s.s_size()); ++mask) {
      CrispSubset p = CrispSubset::from_mask(Carrier::S, s.s_size(), mask);
      CrispFlags f = ctx.classify(p);
      auto b = oracle::bits(p);
      ASSERT_EQ(f.left_ideal, oracle::left_ideal_s(s, b));
      ASSERT_EQ(f.right_ideal, oracle::right_ideal_s(s, b));
      ASSERT_EQ(f.prime, f.ideal && oracle::prime_s(s, b));
    }
  }
}

TEST(Classify, FuzzyIdealFlagsMatchRawOracle) {
  for (const GammaContext& ctx : contexts()) {
    const GammaSemigroup& s = ctx.semigroup();
    for (const IFSubset& a : oracle::all_ifs(Carrier::S, s.s_size(), oracle::halves())) {
      FuzzyFlags f = ctx.classify(a);
      ASSERT_EQ(f.ifli, oracle::ifli_s(s, a));
      ASSERT_EQ(f.ifri, oracle::ifri_s(s, a));
    }
  }
}

// Fuzzy ideals, prime ideals and semiprime ideals are exactly the subsets
// whose level sets are crisp ones of the same kind, on every carrier.
TEST(Classify, LevelSetCharacterisations) {
  for (const GammaContext& ctx : contexts()) {
    for (Carrier c : {Carrier::S, Carrier::L, Carrier::R}) {
      const ProductView& v = ctx.view(c);
      for (const IFSubset& a : oracle::all_ifs(c, ctx.size(c), oracle::halves())) {
        bool ideals = true, primes = true, semiprimes = true;
        for (const Grade& t : probe_levels(a)) {
          LevelSets ls = level_sets(a, t);
          for (const CrispSubset* p : {&ls.upper, &ls.lower}) {
            CrispFlags cf = classify_crisp(*p, v);
            ideals = ideals && cf.ideal;
            primes = primes && cf.prime;
            semiprimes = semiprimes && cf.semiprime;
          }
        }
        FuzzyFlags f = classify_fuzzy(a, v);
        ASSERT_EQ(f.ifi, ideals) << a.str();
        ASSERT_EQ(f.ifpi, primes) << a.str();
        ASSERT_EQ(f.ifspi, semiprimes) << a.str();
        if (f.ifi) {
          ASSERT_EQ(f.ifspi, fuzzy_semiprime_pointwise(a, v)) << a.str();
        }
        if (f.ifpi) {
          ASSERT_TRUE(f.ifspi);
        }
      }
    }
  }
}

TEST(CharacteristicPair, MirrorsCrispFlags) {
  for (const GammaContext& ctx : contexts()) {
    const std::size_t n = ctx.size(Carrier::S);
    for (unsigned long long mask = 1; mask < (1ULL << n); ++mask) {
      CrispSubset p = CrispSubset::from_mask(Carrier::S, n, mask);
      IFSubset chi = characteristic_pair(p);
      for (Index e = 0; e < n; ++e) ASSERT_TRUE(sum_is_one(chi.mu(e), chi.nu(e)));
      CrispFlags cf = ctx.classify(p);
      FuzzyFlags ff = ctx.classify(chi);
      ASSERT_EQ(cf.ideal, ff.ifi);
      ASSERT_EQ(cf.prime, ff.ifpi);
      ASSERT_EQ(cf.semiprime, ff.ifspi);
    }
  }
}

TEST(Family, InfAndInclusion) {
  IFSubset a = ifs(Carrier::S, {Grade::one(), g(1, 4)}, {Grade::zero(), g(1, 2)});
  IFSubset b = ifs(Carrier::S, {g(1, 2), g(1, 2)}, {g(1, 4), g(1, 4)});
  IFSubset inf = inf_family({a, b});
  EXPECT_EQ(inf, ifs(Carrier::S, {g(1, 2), g(1, 4)}, {g(1, 4), g(1, 2)}));
  EXPECT_TRUE(includes(inf, a));
  EXPECT_TRUE(includes(inf, b));
  EXPECT_FALSE(includes(a, b));
  EXPECT_THROW(inf_family({}), input_error);
  EXPECT_THROW(includes(a, ifs(Carrier::L, {g(1, 2), g(1, 2)}, {g(1, 4), g(1, 4)})), input_error);
}

TEST(Family, InfOfIdealsIsIdeal) {
  GammaContext ctx(fixtures::z3());
  std::vector<IFSubset> ideals;
  for (const IFSubset& a : oracle::all_ifs(Carrier::S, 3, oracle::halves()))
    if (ctx.classify(a).ifi) ideals.push_back(a);
  ASSERT_FALSE(ideals.empty());
  for (const IFSubset& a : ideals)
    for (const IFSubset& b : ideals) ASSERT_TRUE(ctx.classify(inf_family({a, b})).ifi);
}
