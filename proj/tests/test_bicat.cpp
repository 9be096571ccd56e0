#include <gtest/gtest.h>

#include "polyweave/bicat.hpp"
#include "suites.hpp"

using namespace pw;

namespace {

const Budget kB{3, 3, 4};

std::string info(const Report& r, const std::string& key) {
  for (const auto& [k, v] : r.info)
    if (k == key) return v;
  return "";
}

}  // namespace

TEST(Bicategory, CocycleSourceSatisfiesTheAxioms) {
  FiniteBicategory B = zg_source();
  Report r = check_bicategory_axioms(B);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(info(r, "pentagon-instances"), "16");
  auto [n, bad] = test::pentagon_by_tables(B);
  EXPECT_EQ(n, 16u);
  EXPECT_TRUE(bad.empty());
}

TEST(Bicategory, NonCocycleAssociatorBreaksThePentagon) {
  FiniteBicategory B = zg_source();
  // flip a single associator component to the other automorphism
  auto& [key, f] = *B.assoc.begin();
  const auto& par = B.hom2(B.two[f].src, B.two[f].tgt);
  ASSERT_EQ(par.size(), 2u);
  f = par[0] == f ? par[1] : par[0];
  (void)key;
  EXPECT_FALSE(test::pentagon_by_tables(B).second.empty());
  EXPECT_FALSE(check_bicategory_axioms(B).ok());
}

TEST(Bicategory, ExtractionOfX2AndGrothOfZG) {
  auto zsrc = std::make_shared<const FiniteBicategory>(zg_source());
  for (const SPtr& X : {fixture("x2"), groth(zsrc)}) {
    ExtractChoices ch = default_choices(*X, kB);
    Extracted ex = extract_bicategory(*X, ch, kB);
    Report ax = check_bicategory_axioms(ex.B);
    EXPECT_TRUE(ax.ok()) << X->label();
    auto [n, bad] = test::pentagon_by_tables(ex.B);
    EXPECT_EQ(n, 16u);
    EXPECT_TRUE(bad.empty());
    // every extracted 2-cell is a unary cell of X and the index inverts it
    for (int f = 0; f < ex.B.n2(); ++f) {
      const Cell& c = ex.cells[f];
      EXPECT_EQ(c.in.size(), 1u);
      EXPECT_EQ(c.out.size(), 1u);
      EXPECT_EQ(ex.index.at(c), f);
    }
  }
}

TEST(Bicategory, ExtractedZGRecoversTheCocycle) {
  // the extracted associator on (1,1,1) is the nontrivial automorphism,
  // every other one is an identity
  SPtr X = groth(std::make_shared<const FiniteBicategory>(zg_source()));
  ExtractChoices ch = default_choices(*X, kB);
  Extracted ex = extract_bicategory(*X, ch, kB);
  const FiniteBicategory& B = ex.B;
  int one = -1;
  for (int a = 0; a < B.n1(); ++a)
    if (B.one[a].name == "1") one = a;
  ASSERT_GE(one, 0);
  for (const auto& [k, f] : B.assoc) {
    auto [a, b, c] = k;
    bool nontrivial = a == one && b == one && c == one;
    EXPECT_EQ(f != B.vunit[B.two[f].src], nontrivial);
  }
}

TEST(RoundTrip, GrothOfExtractIsEquivalent) {
  for (const char* name : {"x2", "zg"}) {
    SPtr X = fixture(name);
    ExtractChoices ch = default_choices(*X, kB);
    Extracted ex = extract_bicategory(*X, ch, kB);
    RoundTrip rt = groth_extract_equivalence(X, ch, ex, kB);
    EXPECT_TRUE(check_morphism(*rt.E.f, *X, *rt.Y, kB).ok()) << name;
    EXPECT_TRUE(check_morphism(*rt.E.g, *rt.Y, *X, kB).ok()) << name;
    EXPECT_TRUE(verify_equivalence(rt.E, X, rt.Y, kB).holds) << name;
  }
}

TEST(Linear, BooleanDistributorsHaveTheRightShapes) {
  SPtr B = fixture("b4");
  ExtractChoices t = default_choices(*B, kB);
  ExtractChoices p = default_choices(*make_co(B), kB);
  LinearBicatData L = extract_linear(B, t, p, kB);
  EXPECT_TRUE(check_bicategory_axioms(L.tensor.B).ok());
  EXPECT_TRUE(check_bicategory_axioms(L.par.B).ok());
  EXPECT_TRUE(check_linear_shapes(*B, L).ok());
  EXPECT_EQ(L.delta_l.size(), 64u);
  EXPECT_EQ(L.delta_r.size(), 64u);
}
