#include <gtest/gtest.h>

#include "ainf/cobar.hpp"
#include "ainf/hopf.hpp"
#include "generators.hpp"

using namespace ainf;

namespace {

Element component(const CobarChain& c, std::size_t length, Prime p) {
  auto it = c.find(length);
  return it == c.end() ? Element(length, p) : it->second;
}

}  // namespace

TEST(Desuspend, SignsFollowPosition) {
  const Grading g(Prime(3), 1);
  const Prime p(3);
  // |v| = 3 is odd: a leading v flips the sign of a length-2 word.
  EXPECT_EQ(desuspend(g, Element::word({{1, 0}, {0, 1}}, p)),
            -Element::word({{1, 0}, {0, 1}}, p));
  EXPECT_EQ(desuspend(g, Element::word({{0, 1}, {1, 0}}, p)), Element::word({{0, 1}, {1, 0}}, p));
  EXPECT_EQ(desuspend(g, Element::word({{1, 0}}, p)), Element::word({{1, 0}}, p));
  // v|v|v: exponents 2 + 1 + 0.
  EXPECT_EQ(desuspend(g, Element::word({{1, 0}, {1, 0}, {1, 0}}, p)),
            -Element::word({{1, 0}, {1, 0}, {1, 0}}, p));
}

TEST(AinfFamily, ValidatesOperations) {
  const HopfStructure s({Prime(3), 1});
  AinfFamily f(s.grading());
  EXPECT_THROW(f.set(identity_map(s.grading(), 1)), std::invalid_argument);
  EXPECT_THROW(f.set(zero_map(s.grading(), 1, 3, 0)), std::invalid_argument);
  f.set(s.delta2());
  EXPECT_NE(f.find(2), nullptr);
  EXPECT_EQ(f.find(3), nullptr);
}

TEST(CobarDifferential, SquaresToZeroForCoassociativeCoproduct) {
  const HopfStructure s({Prime(5), 1});
  AinfFamily f(s.grading());
  f.set(s.delta2());
  prop::Gen gen(17);
  for (int trial = 0; trial < 60; ++trial) {
    const TensorWord w = gen.word(gen.uniform(1, 3), 4);
    EXPECT_TRUE(is_zero(cobar_square(f, w, w.size() + 2))) << to_string(w);
  }
}

TEST(CobarDifferential, SquaresToZeroForFullStructure) {
  const HopfStructure s({Prime(3), 1});
  const AinfFamily f = s.family();
  prop::Gen gen(19);
  for (int trial = 0; trial < 40; ++trial) {
    const TensorWord w = gen.word(gen.uniform(1, 2), 5);
    EXPECT_TRUE(is_zero(cobar_square(f, w, w.size() + 4))) << to_string(w);
  }
}

TEST(CobarDifferential, IsADerivation) {
  const HopfStructure s({Prime(3), 1});
  const AinfFamily f = s.family();
  const Prime p(3);
  const Grading& g = s.grading();
  prop::Gen gen(23);
  for (int trial = 0; trial < 80; ++trial) {
    const BasisElt a = gen.basis(6), b = gen.basis(6);
    const CobarChain da = cobar_differential(f, TensorWord{a}, 3);
    const CobarChain db = cobar_differential(f, TensorWord{b}, 3);
    const CobarChain dab = cobar_differential(f, TensorWord{a, b}, 4);
    // A cobar letter has degree |x| - 1.
    const bool odd_a = (g.degree(a) - 1) % 2 != 0;
    for (std::size_t k : {2u, 3u}) {
      Element expected = concat(component(da, k, p), Element::word({b}, p));
      const Element right = concat(Element::word({a}, p), component(db, k, p));
      expected = odd_a ? expected - right : expected + right;
      EXPECT_EQ(component(dab, k + 1, p), expected) << to_string(TensorWord{a, b});
    }
  }
}

TEST(CobarDifferential, CutoffDropsLongTerms) {
  const HopfStructure s({Prime(3), 1});
  const CobarChain d = cobar_differential(s.family(), TensorWord{{0, 4}}, 2);
  EXPECT_EQ(d.count(3), 0u);
  EXPECT_FALSE(component(d, 2, Prime(3)).is_zero());
}
