#include <gtest/gtest.h>

#include "ringlab/verifier.hpp"

using namespace ringlab;

class Suite : public ::testing::TestWithParam<std::string> {};

TEST_P(Suite, Passes) {
  const auto r = run_suite(GetParam());
  EXPECT_TRUE(r.error.empty()) << r.error;
  EXPECT_FALSE(r.verdicts.empty());
  for (const auto& v : r.verdicts) EXPECT_TRUE(v.pass) << v.ring << ": " << v.claim << " " << v.detail;
}

namespace {
std::vector<std::string> suite_ids() {
  std::vector<std::string> ids;
  for (const auto& s : suite_table()) ids.push_back(s.id);
  return ids;
}
}  // namespace

INSTANTIATE_TEST_SUITE_P(All, Suite, ::testing::ValuesIn(suite_ids()), [](const auto& info) {
  std::string s = info.param;
  for (auto& c : s)
    if (c == '-') c = '_';
  return s;
});

TEST(Verifier, BoundedSuitesAreLabelled) {
  for (const auto& s : suite_table()) {
    const std::string id = s.id;
    EXPECT_EQ(s.bounded, id == "SKEW-EX" || id == "LAURENT" || id == "ALPHA") << id;
  }
}

TEST(Verifier, UnknownSuiteIsRejected) { EXPECT_THROW(run_suite("NOPE"), std::invalid_argument); }

TEST(Search, LnzsButNotSemicommutative) {
  const auto r = counterexample_search({Property::lnzs}, {Property::semicommutative});
  ASSERT_FALSE(r.rings.empty());
  EXPECT_EQ(r.rings.front(), "T(2,Zmod(2))");
}

TEST(Search, ReducedButNotLnzsFindsNothing) {
  const auto r = counterexample_search({Property::reduced}, {Property::lnzs});
  EXPECT_TRUE(r.rings.empty());
  EXPECT_FALSE(r.exhausted);
  EXPECT_NE(r.note.find("implication holds"), std::string::npos);
}

TEST(Search, QuasiNormalButNotLnzsIncludesCongruenceSubring) {
  const auto r = counterexample_search({Property::quasi_normal}, {Property::lnzs});
  EXPECT_NE(std::find(r.rings.begin(), r.rings.end(), "CongrSubring(16)"), r.rings.end());
}

TEST(Search, BudgetIsReported) {
  SearchBudget b;
  b.max_rings = 5;
  const auto r = counterexample_search({Property::reduced}, {Property::lnzs}, b);
  EXPECT_TRUE(r.exhausted);
  EXPECT_EQ(r.examined, 5u);
}

TEST(Implications, KnownSeparationsAndImplications) {
  const auto rep = implication_report(Catalog::standard(), 4096);
  EXPECT_EQ(rep.cell(Property::lnzs, Property::ni).verdict, Implication::implied);
  EXPECT_EQ(rep.cell(Property::reduced, Property::lnzs).verdict, Implication::implied);
  EXPECT_EQ(rep.cell(Property::semicommutative, Property::lnzs).verdict, Implication::implied);
  EXPECT_EQ(rep.cell(Property::lnzs, Property::semicommutative).verdict, Implication::separated);
  EXPECT_EQ(rep.cell(Property::quasi_normal, Property::lnzs).verdict, Implication::separated);
  for (const auto& s : rep.separations) {
    if (s.ring.rfind("FreeQuot", 0) == 0) continue;  // the weak half is quoted
    EXPECT_TRUE(s.confirmed) << s.ring;
  }
}
