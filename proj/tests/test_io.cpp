#include <gtest/gtest.h>

#include "support.hpp"

using namespace gsg;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    LineReader in(text);
    parse_gsg(in);
    in.expect_end();
  } catch (const input_error& e) {
    return e.line();
  }
  return 0;
}

std::size_t subset_error_line(const std::string& text) {
  try {
    parse_subset_text(text);
  } catch (const input_error& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(GsgText, WritesExpectedLayout) {
  EXPECT_EQ(write_gsg(fixtures::i2()), "GSG 1\nS 2\nG 2\nT 0\n0 0\n0 0\nT 1\n0 0\n0 1\n");
}

TEST(GsgText, RoundTripsEnumeratedInstances) {
  for (const GammaSemigroup& s : enumerate(2, 2).instances) EXPECT_EQ(parse_gsg_text(write_gsg(s)), s);
  std::vector<Index> gt(8);
  for (Index i = 0; i < 8; ++i) gt[i] = (i >> 2) & (i >> 1) & i & 1;
  GammaSemigroup with_gt(2, 2, fixtures::i2().table(), gt);
  EXPECT_EQ(parse_gsg_text(write_gsg(with_gt)), with_gt);
}

TEST(GsgText, CommentsBlankLinesAndCarriageReturns) {
  std::string text = "# header\r\nGSG 1\r\n\nS 1   # one element\nG 1\nT 0\n0\n";
  EXPECT_EQ(parse_gsg_text(text), fixtures::singleton());
}

TEST(GsgText, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("GSG 2\nS 1\nG 1\nT 0\n0\n"), 1u);
  EXPECT_EQ(error_line("GSG 1\nS x\nG 1\nT 0\n0\n"), 2u);
  EXPECT_EQ(error_line("GSG 1\nS 2\nG 1\nT 0\n0 1\n1\n"), 6u);
  EXPECT_EQ(error_line("GSG 1\nS 2\nG 1\nT 0\n0 1\n1 2\n"), 6u);
  EXPECT_EQ(error_line("GSG 1\nS 1\nG 2\nT 0\n0\nT 0\n0\n"), 6u);
  EXPECT_EQ(error_line("GSG 1\nS 1\nG 1\nT 0\n0\nextra\n"), 6u);
  EXPECT_THROW(parse_gsg_text("GSG 1\nS 1\nG 1\n"), input_error);
}

TEST(SubsetText, IfsRoundTrip) {
  IFSubset a(Carrier::L, {Grade::one(), Grade(1, 3)}, {Grade::zero(), Grade(2, 3)});
  std::string text = write_ifs(a);
  EXPECT_EQ(text, "IFS 1\ncarrier L\n0 1 0\n1 1/3 2/3\n");
  EXPECT_EQ(std::get<IFSubset>(parse_subset_text(text)), a);
}

TEST(SubsetText, SetRoundTrip) {
  CrispSubset p(Carrier::R, 4, {0, 3});
  std::string text = write_set(p);
  EXPECT_EQ(text, "SET 1\ncarrier R\nsize 4\nmembers 0 3\n");
  EXPECT_EQ(std::get<CrispSubset>(parse_subset_text(text)), p);
  CrispSubset none(Carrier::S, 2);
  EXPECT_EQ(std::get<CrispSubset>(parse_subset_text(write_set(none))), none);
}

TEST(SubsetText, ErrorsCarryLineNumbers) {
  EXPECT_EQ(subset_error_line("IFS 1\ncarrier S\n0 1 0\n1 3/4 1/2\n"), 4u);
  EXPECT_EQ(subset_error_line("IFS 1\ncarrier S\n0 1 0\n2 0 0\n"), 4u);
  EXPECT_EQ(subset_error_line("IFS 1\ncarrier Q\n0 1 0\n"), 2u);
  EXPECT_EQ(subset_error_line("IFS 1\ncarrier S\n0 1 zero\n"), 3u);
  EXPECT_EQ(subset_error_line("SET 1\ncarrier S\nsize 2\nmembers 0 0\n"), 4u);
  EXPECT_EQ(subset_error_line("SET 1\ncarrier S\nsize 2\nmembers 2\n"), 4u);
  EXPECT_EQ(subset_error_line("BAG 1\n"), 1u);
}

TEST(SubsetText, SeveralDocumentsInOneStream) {
  LineReader in("SET 1\ncarrier S\nsize 1\nmembers 0\nIFS 1\ncarrier S\n0 1/2 1/2\n");
  EXPECT_TRUE(std::holds_alternative<CrispSubset>(parse_subset(in)));
  EXPECT_TRUE(std::holds_alternative<IFSubset>(parse_subset(in)));
  EXPECT_TRUE(in.done());
}
