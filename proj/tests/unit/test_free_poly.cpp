#include <gtest/gtest.h>

#include <random>

#include "ringlab/constructions.hpp"
#include "ringlab/error.hpp"
#include "ringlab/free_algebra.hpp"
#include "ringlab/poly.hpp"
#include "ringlab/spec_lang.hpp"

using namespace ringlab;

namespace {
RingPtr ring(const std::string& s) { return build_ring(s).finite; }
}

TEST(FreeAlgebra, ParseRenderAndArithmetic) {
  const FreeAlgebra A(3, {"x", "y"});
  const auto f = A.parse("(x+y)^2");
  EXPECT_EQ(A.render(f), A.render(A.parse("xx+xy+yx+yy")));
  EXPECT_TRUE(A.add(A.parse("x"), A.parse("2x")).is_zero());  // char 3
  EXPECT_NE(A.mul(A.parse("x"), A.parse("y")), A.mul(A.parse("y"), A.parse("x")));
}

TEST(FreeAlgebra, MultiLetterNames) {
  const FreeAlgebra A(2, {"a0", "a1", "c"});
  EXPECT_EQ(A.render(A.parse("a0 c a1")), "a0ca1");
  EXPECT_EQ(A.parse_word("a0ca1").size(), 3u);
}

TEST(FreeAlgebra, WordIdealMembership) {
  const auto sq = WordIdeal::square_of_factor(std::string(2, '\0'));
  // Overlapping occurrences do not count: xxx has only one disjoint pair.
  EXPECT_FALSE(sq.contains_word(std::string(3, '\0')));
  EXPECT_TRUE(sq.contains_word(std::string(4, '\0')));
  EXPECT_TRUE(sq.contains_word(std::string("\0\0\1\0\0", 5)));
  const auto fac = WordIdeal::factor(std::string("\0\1", 2));
  EXPECT_TRUE(fac.contains_word(std::string("\2\0\1", 3)));
  EXPECT_FALSE(fac.contains_word(std::string("\1\0", 2)));
}

TEST(FreeAlgebra, QuotientCapIsEnforced) {
  const auto Q = free_algebra_quotient(2, "xy", "factor:xy", 4);
  const auto y = Q->parse("y");
  EXPECT_THROW(Q->pow(y, 5), DegreeCapExceeded);
  EXPECT_FALSE(Q->nilpotency_index(y).has_value());
  EXPECT_EQ(Q->nilpotency_index(Q->parse("yx")), 2u);
}

TEST(FreeAlgebra, MonomialLnzsSearch) {
  const auto Q = free_algebra_quotient(2, "xyz", "factor:xy", 6);
  const auto w = monomial_lnzs_search(*Q, 4);
  ASSERT_TRUE(w);
  EXPECT_EQ(Q->algebra().render_word(w->a), "x");
  EXPECT_EQ(Q->algebra().render_word(w->r), "z");
  EXPECT_EQ(Q->algebra().render_word(w->b), "yx");
}

TEST(SkewPoly, MultiplicationIsAssociative) {
  const auto R = ring("Product(Fp(2),Fp(3))");
  const SkewPolyRing P(Endomorphism::identity(R));
  const auto S = ring("Product(Fp(2),Fp(2))");
  const SkewPolyRing Q(endomorphism_by_name(S, "swap"));
  std::mt19937_64 rng(5);
  for (const SkewPolyRing* ring : {&P, &Q}) {
    const auto n = *ring->universe_size(2);
    for (int t = 0; t < 300; ++t) {
      const auto f = ring->from_index(rng() % n, 2), g = ring->from_index(rng() % n, 2), h = ring->from_index(rng() % n, 2);
      EXPECT_EQ(ring->mul(ring->mul(f, g), h), ring->mul(f, ring->mul(g, h)));
      EXPECT_EQ(ring->mul(f, ring->add(g, h)), ring->add(ring->mul(f, g), ring->mul(f, h)));
    }
  }
}

TEST(SkewPoly, XTwistsCoefficients) {
  const auto S = ring("Product(Fp(2),Fp(2))");
  const SkewPolyRing Q(endomorphism_by_name(S, "swap"));
  const Elem e1 = *S->parse_element("(1,0)"), e2 = *S->parse_element("(0,1)");
  // x a = alpha(a) x
  EXPECT_EQ(Q.mul(Q.x(), Q.constant(e1)), Q.monomial(e2, 1));
}

TEST(SkewPoly, NilpotencyTestMatchesPowers) {
  const auto R = ring("Zmod(4)");
  const SkewPolyRing P(Endomorphism::identity(R));
  const auto n = *P.universe_size(2);
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto f = P.from_index(i, 2);
    const auto r = nilpotency_test(P, f);
    bool brute = false;
    for (unsigned k = 1; k <= 12 && !brute; ++k) brute = P.pow(f, k).is_zero();
    EXPECT_EQ(r.nilpotent, brute) << P.render(f);
  }
}

TEST(SkewPoly, EndomorphismRejectsNonHomomorphisms) {
  const auto R = ring("Zmod(4)");
  EXPECT_THROW(Endomorphism(R, {0, 2, 0, 2}, "double"), PreconditionError);
  EXPECT_THROW(endomorphism_by_name(R, "swap"), PreconditionError);
}

TEST(BoundedChecks, RecordTheirUniverse) {
  const auto R = ring("Fp(2)");
  const SkewPolyRing P(Endomorphism::identity(R));
  const auto c = nilradical_equality_check(P);
  EXPECT_TRUE(c.holds);
  EXPECT_TRUE(c.exhaustive);
  EXPECT_EQ(c.covered, 8u);
  EXPECT_FALSE(c.universe.empty());
}

TEST(BoundedChecks, ArmendarizAndAlphaCondition) {
  BoundedOptions one;
  one.degree = 1;
  EXPECT_TRUE(armendariz_check(ring("Zmod(4)"), one).holds);
  EXPECT_TRUE(armendariz_check(ring("Fp(3)"), one).holds);
  // T_2(F_2) is not Armendariz.
  EXPECT_FALSE(armendariz_check(ring("T(2,Fp(2))"), one).holds);
  const auto S = ring("Product(Fp(2),Fp(2))");
  EXPECT_FALSE(alpha_condition_check(endomorphism_by_name(S, "swap")).holds);
  EXPECT_TRUE(alpha_condition_check(Endomorphism::identity(S)).holds);
}

TEST(BoundedChecks, SkewLnzsFailureOverSwap) {
  const auto S = ring("Product(Fp(2),Fp(2))");
  const SkewPolyRing Q(endomorphism_by_name(S, "swap"));
  BoundedOptions one;
  one.degree = 1;
  EXPECT_TRUE(skew_lnzs_witness(Q, one).has_value());
  EXPECT_FALSE(skew_lnzs_transfer_check(Q, one).holds);
}

TEST(Laurent, RoundTripAndInverse) {
  const auto R = ring("Zmod(4)");
  const LaurentRing L(R);
  const SkewPolyRing P(Endomorphism::identity(R));
  const auto f = P.from_index(37, 2);
  EXPECT_EQ(L.to_skew(P, L.from_skew(P, f)), f);
  const auto one = R->one();
  EXPECT_EQ(L.mul(L.monomial(one, -1), L.monomial(one, 1)), L.monomial(one, 0));
  EXPECT_EQ(L.render(L.monomial(one, -2)), L.render(L.make(-2, {one})));
}

TEST(SkewPoly, SpecExampleTwoPlusTwoX) {
  const auto R = ring("Zmod(4)");
  const SkewPolyRing P(Endomorphism::identity(R));
  const auto f = P.make({Elem{2}, Elem{2}});
  const auto r = nilpotency_test(P, f);
  EXPECT_TRUE(r.nilpotent);
  EXPECT_EQ(r.index, 2u);
  EXPECT_EQ(r.coefficient_bound, 5u);  // 2 + 2 + 1
}

TEST(SkewPoly, IdentityMatchesConvolution) {
  for (const char* spec : {"Zmod(4)", "T(2,Fp(2))", "Product(Fp(2),Fp(2))"}) {
    const auto R = ring(spec);
    const SkewPolyRing P(Endomorphism::identity(R));
    std::mt19937_64 rng(11);
    const auto n = *P.universe_size(3);
    for (int t = 0; t < 400; ++t) {
      const auto f = P.from_index(rng() % n, 3), g = P.from_index(rng() % n, 3);
      std::vector<Elem> c(7, R->zero());
      for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        for (std::size_t j = 0; j < g.coeffs.size(); ++j) c[i + j] = R->add(c[i + j], R->mul(f.coeffs[i], g.coeffs[j]));
      EXPECT_EQ(P.mul(f, g), P.make(c)) << spec;
    }
  }
}
