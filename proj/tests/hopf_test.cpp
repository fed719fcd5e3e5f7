#include <gtest/gtest.h>

#include "ainf/hopf.hpp"
#include "generators.hpp"

using namespace ainf;

namespace {

Element word(TensorWord w, std::uint32_t p, std::uint32_t c = 1) {
  return Element::word(std::move(w), Prime(p), c);
}

}  // namespace

TEST(Multiplication, DividedPowersAndExterior) {
  const Grading g(Prime(5), 1);
  EXPECT_EQ(mul(g, {0, 1}, {0, 2}), word({{0, 3}}, 5, 3));
  EXPECT_EQ(mul(g, {0, 2}, {0, 2}), word({{0, 4}}, 5, 1));  // C(4,2) = 6
  EXPECT_TRUE(mul(g, {1, 0}, {1, 3}).is_zero());
  EXPECT_EQ(mul(g, {1, 1}, {0, 1}), word({{1, 2}}, 5, 2));
  EXPECT_EQ(mul(g, {0, 1}, {1, 0}), word({{1, 1}}, 5, 1));
  // gamma_1 * gamma_2 = 3 gamma_3 vanishes mod 3.
  EXPECT_TRUE(mul(Grading(Prime(3), 1), {0, 1}, {0, 2}).is_zero());
}

TEST(Delta2, DividedPowerCoproduct) {
  const Prime p(3);
  Element expected(2, p);
  expected.add_term({{0, 0}, {0, 2}}, 1);
  expected.add_term({{0, 1}, {0, 1}}, 1);
  expected.add_term({{0, 2}, {0, 0}}, 1);
  EXPECT_EQ(delta2(p, {0, 2}), expected);
  EXPECT_EQ(delta2(p, {1, 1}).size(), 4u);
  for (std::uint32_t j = 0; j < 10; ++j) EXPECT_EQ(delta2(p, {0, j}).size(), j + 1);
}

TEST(DeltaP, SupportOnGammaInputs) {
  const Prime p(3);
  EXPECT_EQ(delta_p(p, {0, 1}), word({{1, 0}, {1, 0}, {1, 0}}, 3));
  Element expected(3, p);
  expected.add_term({{1, 1}, {1, 0}, {1, 0}}, 1);
  expected.add_term({{1, 0}, {1, 1}, {1, 0}}, 1);
  expected.add_term({{1, 0}, {1, 0}, {1, 1}}, 1);
  EXPECT_EQ(delta_p(p, {0, 2}), expected);
  EXPECT_TRUE(delta_p(p, {0, 0}).is_zero());
  EXPECT_TRUE(delta_p(p, {1, 3}).is_zero());
}

TEST(DeltaP, TermCountIsCompositionCount) {
  // Weak compositions of j-1 into p parts: C(j-1+p-1, p-1).
  for (std::uint32_t pv : {3u, 5u}) {
    for (std::uint32_t j = 1; j <= 6; ++j)
      EXPECT_EQ(delta_p(Prime(pv), {0, j}).size(), binom_exact(j - 1 + pv - 1, pv - 1));
  }
}

TEST(HopfStructure, MapsCarryExpectedDegrees) {
  const HopfStructure s({Prime(5), 2});
  EXPECT_EQ(s.mu().degree(), 0);
  EXPECT_EQ(s.delta2().degree(), 0);
  EXPECT_EQ(s.delta_p().degree(), 3);
  EXPECT_EQ(s.delta_p().arity_out(), 5u);
  EXPECT_EQ(s.delta_p().name(), "Delta5");
  EXPECT_THROW(s.f(1), std::invalid_argument);
  EXPECT_EQ(s.f(3).arity_out(), 3u);
  EXPECT_EQ(s.g(2)(BasisElt{0, 3}), s.delta2()(BasisElt{0, 3}));
}

TEST(HopfStructure, IteratedCoproductsAgree) {
  // Coassociativity makes f^n and g^n coincide.
  const HopfStructure s({Prime(3), 1});
  for (std::uint32_t j = 0; j <= 6; ++j)
    for (BasisElt x : {BasisElt{0, j}, BasisElt{1, j}})
      EXPECT_EQ(s.f(4)(x), s.g(4)(x)) << to_string(x);
}

TEST(HopfStructure, CorruptionShiftsOneCoefficient) {
  const Corruption c{Corruption::Target::delta2, {0, 2}, {{0, 1}, {0, 1}}, 1};
  const HopfStructure s({Prime(3), 1}, {c});
  EXPECT_EQ(s.delta2()(BasisElt{0, 2}).coeff({{0, 1}, {0, 1}}).value(), 2u);
  EXPECT_EQ(s.delta2()(BasisElt{0, 3}), delta2(Prime(3), {0, 3}));
  const Corruption bad{Corruption::Target::delta_p, {0, 2}, {{0, 1}}, 1};
  EXPECT_THROW(HopfStructure({Prime(3), 1}, {bad}), std::invalid_argument);
}

TEST(Factors, DegreesOfFirstFactors) {
  const auto f = em_factors_n3(Prime(3), 2);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].m, 1u);
  EXPECT_EQ(f[0].v_degree(), 3);
  EXPECT_EQ(f[0].w_degree(), 8);
  EXPECT_EQ(f[1].m, 3u);
  EXPECT_EQ(f[1].v_degree(), 7);
  EXPECT_EQ(f[1].w_degree(), 20);
  EXPECT_EQ(em_factors_n3(Prime(7), 1)[0].m, 1u);
  EXPECT_THROW(em_factors_n3(Prime(3), 0), std::invalid_argument);
  EXPECT_THROW(em_factors_n3(Prime(3), 40), std::overflow_error);
  EXPECT_THROW(StructureParams(Prime(3), 0), std::invalid_argument);
}
