#include <gtest/gtest.h>

#include "oracle/oracles.hpp"
#include "ringlab/catalog.hpp"
#include "ringlab/config.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/error.hpp"
#include "ringlab/ring_core.hpp"
#include "ringlab/spec_lang.hpp"

using namespace ringlab;

namespace {
RingPtr ring(const std::string& s) { return build_ring(s).finite; }
}

TEST(Constructions, CatalogRingsSatisfyTheAxioms) {
  for (const auto* e : Catalog::standard().finite(1024)) {
    AxiomCheckOptions o;
    o.require_identity = e->finite()->has_one();
    const auto rep = ring_axiom_check(*e->finite(), o);
    EXPECT_TRUE(rep.ok()) << e->recipe() << ": " << (rep.violations.empty() ? "" : rep.violations[0]);
  }
}

TEST(Constructions, Sizes) {
  EXPECT_EQ(ring("T(2,Fp(2))")->size(), 8u);
  EXPECT_EQ(ring("T(3,Fp(2))")->size(), 64u);
  EXPECT_EQ(ring("DiagConst(4,Fp(3))")->size(), 2187u);
  EXPECT_EQ(ring("M(2,Fp(2))")->size(), 16u);
  EXPECT_EQ(ring("TrivExt(Zmod(4))")->size(), 16u);
  EXPECT_EQ(ring("Dorroh(ZeroAlg(2,1),2)")->size(), 4u);
  EXPECT_EQ(ring("CongrSubring(16)")->size(), 16384u);
  EXPECT_EQ(ring("Quot(Zmod(12),\"6\")")->size(), 6u);
}

TEST(Constructions, ElementOrderAndRendering) {
  const auto Z = ring("Zmod(5)");
  for (Elem a : Z->elements()) EXPECT_EQ(Z->render(a), std::to_string(a.index));
  const auto T = ring("T(2,Zmod(3))");
  // Slots (1,1), (1,2), (2,2); slot 0 least significant.
  EXPECT_EQ(T->render(Elem{1}), "[[1,0],[0,0]]");
  EXPECT_EQ(T->render(Elem{3}), "[[0,1],[0,0]]");
  EXPECT_EQ(T->render(Elem{9}), "[[0,0],[0,1]]");
  const auto P = ring("TrivExt(Zmod(3))");
  EXPECT_EQ(P->render(Elem{1 + 2 * 3}), "(1,2)");
  for (Elem a : T->elements()) EXPECT_EQ(T->parse_element(T->render(a)), a);
}

TEST(Constructions, TrivialExtensionMultiplication) {
  const auto R = ring("Zmod(4)");
  const auto T = trivial_extension(R);
  for (Elem a : T->elements())
    for (Elem b : T->elements()) {
      const std::uint32_t x = a.index % 4, y = a.index / 4, u = b.index % 4, v = b.index / 4;
      const std::uint32_t p = x * u % 4, q = (x * v + y * u) % 4;
      EXPECT_EQ(T->mul(a, b).index, p + 4 * q);
    }
}

TEST(Constructions, TableRingMatchesItsSource) {
  const auto R = ring("CongrSubring(4)");
  const auto T = materialize(R);
  for (Elem a : R->elements()) {
    EXPECT_EQ(T->render(a), R->render(a));
    for (Elem b : R->elements()) {
      EXPECT_EQ(T->mul(a, b), R->mul(a, b));
      EXPECT_EQ(T->add(a, b), R->add(a, b));
    }
  }
}

TEST(Constructions, QuotientRejectsNonIdeals) {
  const auto T = ring("T(2,Fp(2))");
  // {0, e11} is an additive subgroup but not an ideal.
  const Subgroup S = Subgroup::span(*T, std::vector<Elem>{*T->parse_element("[[1,0],[0,0]]")});
  EXPECT_THROW(quotient(T, S), NotAnIdeal);
}

TEST(Constructions, QuotientByWholeRingIsZeroRing) {
  const auto Z = ring("Zmod(6)");
  const auto Q = quotient(Z, Subgroup::whole(*Z));
  EXPECT_TRUE(Q->degenerate());
  EXPECT_TRUE(Q->is_zero_ring());
}

TEST(Constructions, DorrohRequiresSquarefreeKillingModulus) {
  EXPECT_THROW(build_ring("Dorroh(Zmod(4),4)"), SpecError);
  EXPECT_THROW(build_ring("Dorroh(Zmod(4),2)"), SpecError);
  EXPECT_NO_THROW(build_ring("Dorroh(Zmod(2),2)"));
}

TEST(Constructions, LocalizationRejectsZeroDivisors) {
  const auto Z = ring("Zmod(6)");
  try {
    localize(Z, {Elem{1}, Elem{2}});
    FAIL() << "expected a rejection";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("zero divisor"), std::string::npos);
  }
}

TEST(Constructions, CarrierCapIsEnforced) {
  const auto saved = max_carrier();
  set_max_carrier(1000);
  EXPECT_THROW(build_ring("T(3,Zmod(4))"), ResourceLimit);
  set_max_carrier(saved);
}

TEST(RingCore, NilpotencyIndexWithinBound) {
  for (const auto* e : Catalog::standard().finite(512)) {
    const auto& R = *e->finite();
    for (const auto& n : nilpotents(R)) {
      EXPECT_LE(n.index, R.nilpotency_bound()) << e->recipe();
      EXPECT_EQ(R.pow(n.element, n.index), R.zero());
      if (n.index > 1) EXPECT_NE(R.pow(n.element, n.index - 1), R.zero());
    }
    // Nothing the definition calls nilpotent is missed.
    std::size_t count = 0;
    for (Elem a : R.elements()) count += oracle::nilpotent(R, a);
    EXPECT_EQ(count, nilpotents(R).size()) << e->recipe();
  }
}

TEST(RingCore, AnnihilatorsMatchDefinition) {
  for (const char* spec : {"T(2,Zmod(4))", "M(2,Fp(2))", "TrivExt(Zmod(6))"}) {
    const auto R = ring(spec);
    for (Elem b : R->elements()) {
      const auto L = left_annihilator(*R, b);
      const auto Rt = right_annihilator(*R, b);
      for (Elem a : R->elements()) {
        EXPECT_EQ(L.contains(a), R->mul(a, b) == R->zero());
        EXPECT_EQ(Rt.contains(a), R->mul(b, a) == R->zero());
      }
    }
  }
}

TEST(RingCore, ClosureFailureMatchesBruteForce) {
  const auto R = ring("T(3,Fp(2))");
  for (Elem b : nilpotent_elements(*R)) {
    const auto L = left_annihilator(*R, b);
    bool closed = true;
    for (Elem a : L.elements())
      for (Elem r : R->elements()) closed = closed && L.contains(R->mul(a, r));
    EXPECT_EQ(is_right_closed(*R, L), closed);
  }
}

TEST(RingCore, IdealGeneratedIsSmallest) {
  const auto Z = ring("Zmod(12)");
  const auto I = ideal_generated_by(*Z, {Elem{8}});
  EXPECT_EQ(I.size(), 3u);  // {0, 4, 8}
  EXPECT_TRUE(I.contains(Elem{4}));
}

TEST(RingCore, MinimalLeftIdempotentsMatchOracle) {
  for (const char* spec : {"T(2,Fp(2))", "M(2,Fp(2))", "Product(Fp(2),Fp(3))", "T(3,Fp(2))"}) {
    const auto R = ring(spec);
    EXPECT_EQ(minimal_left_idempotents(*R), oracle::minimal_left_idempotents(*R)) << spec;
  }
}
