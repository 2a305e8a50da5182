#include <gtest/gtest.h>

#include <functional>

#include "oracle/oracles.hpp"
#include "ringlab/catalog.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/predicates.hpp"
#include "ringlab/spec_lang.hpp"

using namespace ringlab;

namespace {

RingPtr ring(const std::string& s) { return build_ring(s).finite; }

using Oracle = std::function<bool(const FiniteRing&)>;

struct Case {
  Property property;
  Oracle oracle;
  std::size_t max_size;  // oracles are cubic or worse
};

const std::vector<Case>& cases() {
  static const std::vector<Case> c = {
      {Property::reduced, oracle::reduced, 4096},
      {Property::lnzs, oracle::lnzs, 64},
      {Property::semicommutative, oracle::semicommutative, 64},
      {Property::reversible, oracle::reversible, 512},
      {Property::weakly_semicommutative, oracle::weakly_semicommutative, 32},
      {Property::ni, oracle::ni, 256},
      {Property::abelian, oracle::abelian, 512},
      {Property::quasi_normal, oracle::quasi_normal, 64},
      {Property::left_min_abel, oracle::left_min_abel, 64},
      {Property::left_mc2, oracle::left_mc2, 32},
      {Property::prime, oracle::prime, 32},
      {Property::semiprime, oracle::semiprime, 64},
      {Property::domain, oracle::domain, 512},
  };
  return c;
}

}  // namespace

class PredicateOracle : public ::testing::TestWithParam<std::size_t> {};

TEST_P(PredicateOracle, AgreesWithDefinitionOnCatalog) {
  const auto& c = cases()[GetParam()];
  std::size_t n = 0;
  for (const auto* e : Catalog::standard().finite(c.max_size)) {
    const auto& R = *e->finite();
    const auto r = check(R, c.property);
    ASSERT_NE(r.truth, Truth::undecided) << e->recipe();
    EXPECT_EQ(r.holds(), c.oracle(R)) << property_name(c.property) << " on " << e->recipe();
    if (r.witness) EXPECT_TRUE(recheck(R, *r.witness)) << e->recipe();
    ++n;
  }
  EXPECT_GT(n, 20u);
}

INSTANTIATE_TEST_SUITE_P(AllProperties, PredicateOracle, ::testing::Range<std::size_t>(0, 13),
                         [](const auto& info) {
                           std::string s(property_name(cases()[info.param].property));
                           for (auto& ch : s)
                             if (ch == '-') ch = '_';
                           return s;
                         });

TEST(Predicates, TriangularModelOracle) {
  // Library ring against independently coded integer matrices.
  for (unsigned m : {2u, 3u, 4u, 6u}) {
    const oracle::TriangularModel M{2, m};
    EXPECT_EQ(is_lnzs(*ring("T(2,Zmod(" + std::to_string(m) + "))")).holds(), M.lnzs()) << m;
  }
  EXPECT_FALSE((oracle::TriangularModel{3, 2}).lnzs());
}

TEST(Predicates, LnzsVariantsAgree) {
  for (const auto* e : Catalog::standard().finite(512)) {
    const auto& R = *e->finite();
    const auto a = is_lnzs(R), b = is_lnzs_exhaustive(R), c = is_lnzs_by_closure(R);
    EXPECT_EQ(a.truth, b.truth) << e->recipe();
    EXPECT_EQ(a.truth, c.truth) << e->recipe();
  }
}

TEST(Predicates, WitnessConditionsEvaluate) {
  const auto R = ring("T(3,Fp(2))");
  const auto r = is_lnzs(*R);
  ASSERT_TRUE(r.witness);
  for (const auto& c : r.witness->conditions)
    if (c.forall.empty()) EXPECT_EQ(R->render(evaluate(*R, *r.witness, c.expression)), c.value);
  // A tampered witness no longer rechecks.
  Witness w = *r.witness;
  w.elems[1].second = R->zero();
  EXPECT_FALSE(recheck(*R, w));
}

TEST(Predicates, ReducedWitnessIsLeastNilpotent) {
  const auto r = is_reduced(*ring("Zmod(4)"));
  ASSERT_TRUE(r.fails());
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->rendered.at(0).second, "2");
}

TEST(Predicates, ZeroRingHoldsVacuously) {
  const auto Z = ring("Zmod(1)");
  const auto r = check(*Z, Property::lnzs);
  EXPECT_TRUE(r.holds());
  EXPECT_NE(r.note.find("zero ring"), std::string::npos);
}

TEST(Predicates, RingsWithoutIdentity) {
  const auto Z = ring("ZeroAlg(2,2)");
  EXPECT_FALSE(Z->has_one());
  EXPECT_TRUE(is_lnzs(*Z).holds());
  EXPECT_TRUE(is_semicommutative(*Z).holds());
  EXPECT_TRUE(is_quasi_normal(*Z).holds());
  EXPECT_FALSE(is_reduced(*Z).holds());
}

TEST(Predicates, FreeQuotients) {
  const auto W = free_algebra_quotient(2, "xy", "square:xx", 6);
  const auto l = check(*W, Property::lnzs);
  ASSERT_TRUE(l.fails());
  EXPECT_TRUE(recheck(*W, *l.witness));
  EXPECT_EQ(check(*W, Property::prime).truth, Truth::undecided);
  EXPECT_TRUE(check(*W, Property::reduced).fails());
  const auto Z = z2a_quotient();
  EXPECT_EQ(check(*Z, Property::lnzs).truth, Truth::undecided);
}

TEST(Predicates, PropertyNamesParse) {
  for (Property p : all_properties()) EXPECT_EQ(parse_property(property_name(p)), p);
  EXPECT_EQ(parse_property("Quasi-Normal"), Property::quasi_normal);
  EXPECT_EQ(parse_property("weakly_semicommutative"), Property::weakly_semicommutative);
  EXPECT_FALSE(parse_property("commutative").has_value());
}
