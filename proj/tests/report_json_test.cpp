#include <gtest/gtest.h>

#include "ainf/report_json.hpp"

using namespace ainf;

TEST(Json, ElementLayout) {
  Element x(2, Prime(3));
  x.add_term({{1, 0}, {0, 2}}, 2);
  x.add_term({{0, 1}, {0, 1}}, 1);
  const json j = element_json(x);
  EXPECT_EQ(j["k"], 2);
  ASSERT_EQ(j["terms"].size(), 2u);
  EXPECT_EQ(j["terms"][0]["word"], json::parse("[[0,1],[0,1]]"));
  EXPECT_EQ(j["terms"][1]["coeff"], 2);
}

TEST(Json, FacesAndTrees) {
  EXPECT_EQ(face_json(OrderedPartition::parse("13|2")), json::parse("[[1,3],[2]]"));
  const auto t = *tonks_projection(OrderedPartition::parse("2|13"));
  EXPECT_EQ(tree_json(t), json::parse("[1,[2,3],4]"));
}

TEST(Json, DiagonalDocument) {
  const json d = perm_diagonal_json(2, diagonal_P(OrderedPartition::top(2)), true);
  EXPECT_EQ(d["schema"], "1");
  EXPECT_EQ(d["term_count"], 2);
  EXPECT_EQ(d["terms"][0], json::parse("[[[1],[2]],[[1,2]]]"));
  EXPECT_NE(render_text(d).find("1|2 x 12"), std::string::npos);
}

TEST(Json, CertificateDocumentIsStable) {
  SweepOptions o;
  o.max_j = 3;
  const auto c = certify_hopf_ainf(HopfStructure({Prime(3), 1}), o);
  const json a = certificate_json(c), b = certificate_json(certify_hopf_ainf(HopfStructure({Prime(3), 1}), o));
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["pass"], true);
  EXPECT_EQ(a["w_degree"], 8);
  EXPECT_NE(render_text(a).find("PASS  ainf.n=5"), std::string::npos);
}

TEST(Json, FailingReportCarriesWitness) {
  const Corruption c{Corruption::Target::delta2, {0, 1}, {{0, 0}, {0, 1}}, 1};
  SweepOptions o;
  o.max_j = 3;
  const json doc = certificate_json(certify_hopf_ainf(HopfStructure({Prime(3), 1}, {c}), o));
  EXPECT_EQ(doc["pass"], false);
  bool found = false;
  for (const auto& r : doc["reports"])
    if (!r["pass"].get<bool>()) {
      EXPECT_FALSE(r["witnesses"].empty());
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST(Json, LemmaDocument) {
  const json d = lemma_json(lemma_sweep(Prime(3), 50, 7));
  EXPECT_EQ(d["passed"], 50);
  EXPECT_EQ(d["pass"], true);
  EXPECT_NE(render_text(d).find("50/50"), std::string::npos);
}
