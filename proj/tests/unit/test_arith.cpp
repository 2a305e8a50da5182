#include <gtest/gtest.h>

#include <atomic>
#include <random>

#include "ringlab/config.hpp"
#include "ringlab/error.hpp"
#include "ringlab/linalg.hpp"
#include "ringlab/modarith.hpp"
#include "ringlab/parallel.hpp"
#include "ringlab/rational.hpp"

using namespace ringlab;

TEST(ModArith, PrimesAndFactorizations) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(65537));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_TRUE(is_squarefree(30));
  EXPECT_FALSE(is_squarefree(12));
  const auto f = factorize(360);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], (std::pair<std::uint64_t, unsigned>{2, 3}));
  EXPECT_EQ(f[2], (std::pair<std::uint64_t, unsigned>{5, 1}));
  EXPECT_EQ(max_prime_exponent(16384), 14u);
  EXPECT_EQ(max_prime_exponent(1), 0u);
}

TEST(ModArith, InversesAndBezout) {
  EXPECT_EQ(mod_inverse(3, 16), 11u);
  EXPECT_FALSE(mod_inverse(4, 16).has_value());
  for (std::int64_t a = -20; a <= 20; ++a)
    for (std::int64_t b = -20; b <= 20; ++b) {
      const auto g = extended_gcd(a, b);
      EXPECT_EQ(g.s * a + g.t * b, g.gcd);
    }
}

TEST(Rational, LowestTermsAndOrder) {
  EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
  EXPECT_EQ((Rational(1, 3) + Rational(1, 6)).to_string(), "1/2");
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_THROW(Rational(1, 0), std::exception);
}

TEST(Rational, OverflowIsReported) {
  const Rational big(std::int64_t{1} << 62);
  EXPECT_THROW(big * big, ArithmeticOverflow);
}

TEST(Linalg, HowellFormIsCanonical) {
  // Two generating sets of the same submodule of (Z/8)^2.
  const linalg::Submodule a(8, 2, {{2, 4}, {0, 4}});
  const linalg::Submodule b(8, 2, {{2, 0}, {6, 4}, {4, 0}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.cardinality(), 8u);
  EXPECT_TRUE(a.contains({4, 4}));
  EXPECT_FALSE(a.contains({1, 0}));
}

TEST(Linalg, SubmoduleElementsMatchCardinality) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    std::vector<linalg::ModRow> gens;
    for (int g = 0; g < 3; ++g) gens.push_back({rng() % 12, rng() % 12, rng() % 12});
    const linalg::Submodule S(12, 3, gens);
    const auto elems = S.elements(100000);
    EXPECT_EQ(elems.size(), S.cardinality());
    // Brute-force span.
    std::size_t count = 0;
    for (std::uint64_t x = 0; x < 12 * 12 * 12; ++x) count += S.contains({x % 12, x / 12 % 12, x / 144});
    EXPECT_EQ(count, S.cardinality());
  }
}

TEST(Linalg, Gf2RrefAndLeftKernel) {
  const auto r = linalg::gf2_rref({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, 3);
  EXPECT_EQ(r.size(), 2u);
  const auto K = linalg::left_kernel({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, 3, 2);
  EXPECT_EQ(K.rank(), 1u);
  EXPECT_TRUE(K.contains({1, 1, 1}));
}

TEST(Linalg, RationalKernel) {
  using R = Rational;
  const auto k = linalg::rational_left_kernel({{R(1), R(2)}, {R(2), R(4)}, {R(0), R(1)}}, 2);
  ASSERT_EQ(k.size(), 1u);
  // x * M = 0
  const auto& x = k[0];
  EXPECT_EQ(x[0] * R(1) + x[1] * R(2) + x[2] * R(0), R(0));
  EXPECT_EQ(x[0] * R(2) + x[1] * R(4) + x[2] * R(1), R(0));
}

TEST(Parallel, FindFirstMatchesSequentialForAnyThreadCount) {
  const unsigned saved = thread_count();
  std::vector<int> data(100000);
  std::mt19937 rng(3);
  for (auto& d : data) d = static_cast<int>(rng() % 5000);
  for (unsigned threads : {1u, 2u, 8u}) {
    set_thread_count(threads);
    for (int target : {0, 17, 4999, 6000}) {
      const auto got = parallel_find_first(data.size(), [&](std::size_t i) { return data[i] == target; });
      const auto want = std::find(data.begin(), data.end(), target) - data.begin();
      EXPECT_EQ(got, static_cast<std::size_t>(want));
    }
  }
  set_thread_count(saved);
}

TEST(Parallel, ForVisitsEachIndexOnceAndRethrows) {
  const unsigned saved = thread_count();
  set_thread_count(4);
  std::vector<std::atomic<int>> hits(5000);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
  for (auto& h : hits) EXPECT_EQ(h.load(), 1);
  EXPECT_THROW(parallel_for(5000, [](std::size_t i) {
                 if (i == 4321) throw std::runtime_error("boom");
               }),
               std::runtime_error);
  set_thread_count(saved);
}

TEST(Config, CarrierCap) {
  const auto saved = max_carrier();
  set_max_carrier(100);
  EXPECT_THROW(require_within_cap(101, "test"), ResourceLimit);
  EXPECT_NO_THROW(require_within_cap(100, "test"));
  set_max_carrier(saved);
}
