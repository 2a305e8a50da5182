#include <gtest/gtest.h>

#include "ringlab/catalog.hpp"
#include "ringlab/error.hpp"
#include "ringlab/spec_lang.hpp"

using namespace ringlab;

TEST(Spec, ParsesNestedCalls) {
  const auto n = parse_spec("T(2, Zmod(2))");
  EXPECT_EQ(n.name, "T");
  ASSERT_EQ(n.args.size(), 2u);
  EXPECT_EQ(n.args[0].value, 2);
  EXPECT_EQ(n.args[1].name, "Zmod");
  EXPECT_EQ(print_spec(n), "T(2,Zmod(2))");
  EXPECT_EQ(print_spec(parse_spec("TrivExt(TrivExt(Quat()))")), "TrivExt(TrivExt(Quat()))");
}

TEST(Spec, NamesAreCaseInsensitiveAndWhitespaceIgnored) {
  EXPECT_EQ(parse_spec("  trivext ( zmod( 4 ) ) "), parse_spec("TrivExt(Zmod(4))"));
  EXPECT_EQ(parse_spec("quat"), parse_spec("Quat()"));
}

TEST(Spec, RoundTripsEveryCatalogRecipe) {
  for (const auto& e : Catalog::standard().entries()) {
    const auto n = parse_spec(e.recipe());
    EXPECT_EQ(print_spec(n), e.recipe());
    EXPECT_EQ(parse_spec(print_spec(n)), n);
  }
}

TEST(Spec, ValidationErrors) {
  try {
    parse_spec("T(0, Zmod(2))");
    FAIL();
  } catch (const SpecError& e) {
    EXPECT_NE(std::string(e.what()).find("n must be >= 1"), std::string::npos);
    EXPECT_EQ(e.line(), 1u);
  }
  EXPECT_THROW(parse_spec("Fp(4)"), SpecError);
  EXPECT_THROW(parse_spec("Zmod()"), SpecError);
  EXPECT_THROW(parse_spec("Frobnicate(2)"), SpecError);
  EXPECT_THROW(parse_spec("CongrSubring(7)"), SpecError);
}

TEST(Spec, SyntaxErrorsCarryPositionAndExpectedTokens) {
  try {
    parse_spec("T(2,\n  Zmod(2)");
    FAIL();
  } catch (const SpecError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_FALSE(e.expected().empty());
  }
  try {
    parse_spec("T(2,,Zmod(2))");
    FAIL();
  } catch (const SpecError& e) {
    EXPECT_EQ(e.column(), 5u);
  }
}

TEST(Spec, EvaluatesToTheRightBackend) {
  EXPECT_TRUE(build_ring("T(2,Zmod(2))").finite);
  EXPECT_TRUE(build_ring("TrivExt(Quat())").rational);
  EXPECT_TRUE(build_ring("FreeQuot(2,\"xy\",\"square:xx\",6)").free);
  EXPECT_TRUE(build_ring("Skew(Product(Fp(2),Fp(2)),\"swap\")").skew);
  EXPECT_EQ(build_ring("t(2, zmod(2))").recipe, "T(2,Zmod(2))");
}

TEST(Spec, ConstructionErrorsBecomeSpecErrors) {
  EXPECT_THROW(build_ring("Dorroh(Zmod(4),2)"), SpecError);  // 2 does not kill Z/4
  EXPECT_THROW(build_ring("Quot(Zmod(4),\"7\")"), SpecError);                // not an element
}
