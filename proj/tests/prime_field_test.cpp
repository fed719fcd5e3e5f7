#include <gtest/gtest.h>

#include "ainf/prime_field.hpp"
#include "generators.hpp"

using namespace ainf;

TEST(Prime, AcceptsOddPrimes) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 101u, 65521u}) EXPECT_EQ(Prime(p).value(), p);
}

TEST(Prime, RejectsEverythingElse) {
  for (std::uint32_t p : {0u, 1u, 2u, 4u, 9u, 15u, 91u, 65535u})
    EXPECT_THROW(Prime{p}, std::invalid_argument) << p;
}

TEST(FieldElt, ReducesSignedValues) {
  const Prime p(7);
  EXPECT_EQ(FieldElt(-1, p).value(), 6u);
  EXPECT_EQ(FieldElt(15, p).value(), 1u);
  EXPECT_EQ(FieldElt(-14, p).value(), 0u);
  EXPECT_TRUE(FieldElt(21, p).is_zero());
}

TEST(FieldElt, ModulusMismatchThrows) {
  const FieldElt a(1, Prime(3)), b(1, Prime(5));
  EXPECT_THROW(a + b, ModulusMismatch);
  EXPECT_THROW(a * b, ModulusMismatch);
  EXPECT_THROW(a - b, ModulusMismatch);
}

TEST(FieldElt, RingAxiomsOnRandomTriples) {
  prop::Gen gen(11);
  for (std::uint32_t pv : {3u, 5u, 7u, 10007u}) {
    const Prime p(pv);
    for (int trial = 0; trial < 500; ++trial) {
      const FieldElt a(gen.signed_uniform(-100000, 100000), p);
      const FieldElt b(gen.signed_uniform(-100000, 100000), p);
      const FieldElt c(gen.signed_uniform(-100000, 100000), p);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      EXPECT_TRUE((a + (-a)).is_zero());
      EXPECT_EQ(a - b, a + (-b));
    }
  }
}

TEST(Binomial, ResidueMatchesExactValue) {
  for (std::uint32_t pv : {3u, 5u, 7u}) {
    for (std::uint64_t n = 0; n <= 60; ++n)
      for (std::uint64_t k = 0; k <= n + 2; ++k)
        EXPECT_EQ(binom_residue(n, k, pv), binom_exact(n, k) % pv) << n << " " << k;
  }
}

// Lucas: C(n,k) = prod C(n_i, k_i) over base-p digits.
TEST(Binomial, ResidueMatchesLucasDigits) {
  prop::Gen gen(5);
  for (std::uint32_t pv : {3u, 5u, 7u}) {
    for (int trial = 0; trial < 400; ++trial) {
      const std::uint64_t n = gen.uniform(0, 2000), k = gen.uniform(0, 2000);
      std::uint64_t expected = k > n ? 0 : 1;
      for (std::uint64_t a = n, b = k; expected && (a || b); a /= pv, b /= pv)
        expected = expected * binom_exact(a % pv, b % pv) % pv;
      EXPECT_EQ(binom_residue(n, k, pv), expected) << n << " " << k;
    }
  }
}

TEST(Binomial, FieldWrapperAgrees) {
  const Prime p(5);
  EXPECT_EQ(binom_mod_p(10, 5, p).value(), 252u % 5);
  EXPECT_TRUE(binom_mod_p(3, 4, p).is_zero());
}

TEST(Binomial, TableLimitIsEnforced) {
  EXPECT_THROW(binom_residue(5000, 3, 3), std::out_of_range);
}

TEST(Binomial, ExactOverflowIsReported) {
  EXPECT_EQ(binom_exact(67, 33), 14226520737620288370ull);
  EXPECT_THROW(binom_exact(68, 34), std::overflow_error);
  EXPECT_EQ(binom_exact(3, 7), 0u);
}

TEST(Binomial, VandermondeOnRandomArguments) {
  prop::Gen gen(3);
  for (std::uint32_t pv : {3u, 5u, 7u}) {
    const Prime p(pv);
    for (int trial = 0; trial < 300; ++trial) {
      const std::uint64_t r = gen.uniform(0, 40), s = gen.uniform(0, 40);
      EXPECT_TRUE(vandermonde_check(r, s, gen.uniform(0, r + s), p));
    }
  }
  EXPECT_THROW(vandermonde_check(2, 2, 5, Prime(3)), std::invalid_argument);
}
