#include <gtest/gtest.h>

#include "ainf/checker.hpp"
#include "ainf/report_json.hpp"

using namespace ainf;

namespace {

SweepOptions sweep(std::uint32_t max_j, std::size_t threads = 1) {
  SweepOptions o;
  o.max_j = max_j;
  o.threads = threads;
  return o;
}

}  // namespace

TEST(DefaultBounds, DependOnPrime) {
  EXPECT_EQ(default_max_j(Prime(3)), 12u);
  EXPECT_EQ(default_max_j(Prime(5)), 10u);
  EXPECT_EQ(default_max_j(Prime(7)), 8u);
  EXPECT_EQ(default_max_j(Prime(11)), 6u);
}

TEST(AinfRelations, ResidualsVanishOnNonvacuousLengths) {
  for (std::uint32_t pv : {3u, 5u, 7u}) {
    const HopfStructure s({Prime(pv), 1});
    const AinfFamily f = s.family();
    for (std::size_t n : {std::size_t{3}, std::size_t{pv} + 1, 2 * std::size_t{pv} - 1}) {
      const auto r = ainf_relation(f, n, sweep(6));
      EXPECT_TRUE(r.pass()) << pv << " n=" << n;
      EXPECT_EQ(r.inputs_checked, 14u);
    }
  }
}

TEST(AinfRelations, NonvacuousLengths) {
  EXPECT_EQ(nonvacuous_relations(HopfStructure({Prime(3), 1}).family(), 8),
            (std::vector<std::size_t>{3, 4, 5}));
  EXPECT_EQ(nonvacuous_relations(HopfStructure({Prime(5), 1}).family(), 12),
            (std::vector<std::size_t>{3, 6, 9}));
}

TEST(AinfRelations, DetectsNoncoassociativeCoproduct) {
  const Corruption c{Corruption::Target::delta2, {0, 3}, {{0, 1}, {0, 2}}, 1};
  const HopfStructure s({Prime(3), 1}, {c});
  const auto r = ainf_relation(s.family(), 3, sweep(5));
  ASSERT_FALSE(r.pass());
  EXPECT_EQ(r.witnesses.front().input, (TensorWord{{0, 3}}));
  EXPECT_FALSE(r.witnesses.front().residual.is_zero());
}

TEST(AinfRelations, WitnessListIsCapped) {
  GradedMap skew("skew", Grading(Prime(3), 1), 1, 2, 0, [](const TensorWord& w) {
    Element out(2, Prime(3));
    out.add_term({BasisElt::unit(), w[0]}, 1);
    out.add_term({w[0], BasisElt::unit()}, 2);
    return out;
  });
  AinfFamily f(Grading(Prime(3), 1));
  f.set(skew);
  const auto r = ainf_relation(f, 3, sweep(12));
  EXPECT_FALSE(r.pass());
  EXPECT_LE(r.witnesses.size(), RelationReport::kMaxWitnesses);
  EXPECT_GT(r.failures, RelationReport::kMaxWitnesses);
}

TEST(Cobar, OracleAgreesWithDirectChecker) {
  for (std::uint32_t pv : {3u, 5u}) {
    const HopfStructure s({Prime(pv), 1});
    EXPECT_TRUE(cobar_agreement(s.family(), 2, sweep(6)).pass()) << pv;
    EXPECT_TRUE(cobar_dd_zero(s.family(), 2, sweep(6)).pass()) << pv;
  }
}

TEST(Cobar, OracleAgreesOnBrokenStructures) {
  // Agreement is an identity between two computations; it must hold even when
  // d d is nonzero.
  const Corruption c{Corruption::Target::delta_p, {0, 2}, {{1, 1}, {1, 0}, {1, 0}}, 1};
  const HopfStructure s({Prime(3), 1}, {c});
  EXPECT_TRUE(cobar_agreement(s.family(), 2, sweep(4)).pass());
  EXPECT_FALSE(cobar_dd_zero(s.family(), 2, sweep(4)).pass());
}

TEST(Derivation, ArityMismatchThrows) {
  const HopfStructure s({Prime(3), 1});
  EXPECT_THROW(fg_derivation_check(s.delta_p(), s.f(2), s.f(3), s.mu(), sweep(3)),
               std::invalid_argument);
}

TEST(Derivation, DeltaPIsADerivationOverIteratedCoproducts) {
  const HopfStructure s({Prime(5), 1});
  EXPECT_TRUE(fg_derivation_check(s.delta_p(), s.f(5), s.f(5), s.mu(), sweep(6)).pass());
  EXPECT_TRUE(fg_derivation_check(s.delta_p(), s.g(5), s.g(5), s.mu(), sweep(6)).pass());
}

TEST(HopfCompat, HoldsForSmallPrimes) {
  for (std::uint32_t pv : {3u, 5u}) {
    const HopfStructure s({Prime(pv), 1});
    const auto r = hopf_compat(s, sweep(8));
    EXPECT_TRUE(r.pass()) << pv;
    EXPECT_EQ(r.inputs_checked, 2u * 2u * 45u);
  }
}

TEST(HopfAxioms, HoldForSeveralParameters) {
  for (auto [pv, m] : {std::pair{3u, 1u}, std::pair{3u, 3u}, std::pair{5u, 1u}, std::pair{7u, 2u}}) {
    const HopfStructure s({Prime(pv), m});
    const auto a = hopf_axioms(s, sweep(6));
    EXPECT_TRUE(a.mu_unit.pass() && a.mu_assoc.pass() && a.delta2_coassoc.pass() &&
                a.counit.pass() && a.algebra_map.pass())
        << pv << " " << m;
  }
}

TEST(Certificate, PassesAndIsThreadCountIndependent) {
  const HopfStructure s({Prime(3), 1});
  const auto one = certify_hopf_ainf(s, sweep(6, 1));
  const auto many = certify_hopf_ainf(s, sweep(6, 4));
  EXPECT_TRUE(one.pass());
  EXPECT_EQ(certificate_json(one).dump(), certificate_json(many).dump());
}

TEST(Certificate, ListsEveryCheck) {
  const auto c = certify_hopf_ainf(HopfStructure({Prime(5), 1}), sweep(4));
  std::vector<std::string> ids;
  for (const auto& r : c.reports) ids.push_back(r.relation_id);
  EXPECT_EQ(ids, (std::vector<std::string>{"hopf.mu_unit", "hopf.mu_assoc", "hopf.delta2_coassoc",
                                           "hopf.counit", "hopf.algebra_map", "ainf.n=3",
                                           "ainf.n=6", "ainf.n=9", "ainf.vacuous_scan",
                                           "cobar.dd_zero", "cobar.agreement", "hopf_compat.n=5",
                                           "fg_derivation.Delta_p"}));
}
