#include <gtest/gtest.h>

#include "polyweave/mergebicat.hpp"
#include "suites.hpp"

using namespace pw;

namespace {
const Budget kB{3, 3, 4};
}

TEST(MergeAxioms, HoldOnMergeFixtures) {
  for (const char* f : {"x2", "x2m", "zg"}) {
    Report r = check_merge_axioms(*fixture(f), kB);
    EXPECT_TRUE(r.ok()) << f;
  }
}

TEST(MergeAxioms, TabulatedZGAgreesAndACorruptedEntryIsCaught) {
  SPtr Z = fixture("zg");
  Budget b{2, 2, 3};
  auto T = tabulate(*Z, b);
  EXPECT_TRUE(check_merge_axioms(*T, b).ok());
  // swap the result of one entry for the other parallel cell
  auto [key, tag] = *T->table().begin();
  Cell r = merge(*T, key.t, key.j1, key.j2, key.s, key.i1, key.i2);
  ASSERT_EQ(T->hom_size(r.in, r.out), 2u);
  T->set_entry(key, 1 - tag);
  Report bad = check_merge_axioms(*T, b);
  ASSERT_FALSE(bad.ok());
  EXPECT_EQ(bad.findings[0].kind, "scheme-violation");
}

TEST(MergeUnital, DivisibilityAndInversesAgree) {
  for (const char* f : {"x2", "zg"}) {
    auto r = test::merge_unital(fixture(f), kB);
    EXPECT_TRUE(r.ok()) << f << ": " << (r.failures.empty() ? "" : r.failures[0]);
    EXPECT_GT(r.instances, 0u);
  }
}

TEST(MergeUnital, TwoOutOfThreeOnMergeFixtures) {
  for (const char* f : {"x2", "zg"}) {
    auto r = test::two_out_of_three(fixture(f), kB);
    EXPECT_TRUE(r.ok()) << f;
  }
}

TEST(MergeUnital, SequenceUnitsAreIdentities) {
  SPtr Z = fixture("zg");
  for (const Word& g : {Word{0}, Word{1, 0}, Word{1, 1, 1}}) {
    auto u = find_seq_unit(*Z, g, kB);
    ASSERT_TRUE(u);
    EXPECT_EQ(u->in, g);
    EXPECT_EQ(u->out, g);
    // neutral for every cell out of g
    for (const Cell& p : cells_within(*Z, Budget{3, 3, 3}))
      if (p.in == g) EXPECT_EQ(merge(*Z, *u, 1, (int)g.size(), p, 1, (int)g.size()), p);
  }
}

TEST(Hom, MorphismsFromMod2IntoNaturalsMatchABruteForceCount) {
  Budget b{3, 1, 4};
  SPtr X = fixture("x2m"), Y = fixture("yn");
  // images of 0 and 1 in 0..6 under which every cell of X2m maps to a cell
  size_t want = 0;
  auto cells = cells_within(*X, b);
  for (int f0 = 0; f0 <= 6; ++f0)
    for (int f1 = 0; f1 <= 6; ++f1) {
      bool ok = true;
      for (const Cell& c : cells) {
        int s = 0;
        for (int a : c.in) s += a ? f1 : f0;
        int t = c.out[0] ? f1 : f0;
        ok = ok && s >= t && (s - t) % 2 == 0;
      }
      want += ok;
    }
  HomObject H(X, Y, b);
  EXPECT_EQ((size_t)H.num0(), want);
  EXPECT_EQ(want, 22u);
}

TEST(Transfor, IdentityTransformationValidates) {
  SPtr Z = fixture("zg");
  auto w = coherentize_witnesses(*Z, *find_unit_witnesses(*Z, kB), kB);
  MPtr id = identity_morphism(*Z);
  Transfor t = identity_transfor(*Z, *Z, id, w, kB);
  EXPECT_TRUE(validate_transfor(t, Z, Z, kB).ok());
  EquivalenceData E{id, id, t, t};
  EXPECT_TRUE(verify_equivalence(E, Z, Z, kB).holds);
}
