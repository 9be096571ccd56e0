#include <gtest/gtest.h>

#include "polyweave/strictify.hpp"

using namespace pw;

namespace {

std::string info(const Report& r, const std::string& key) {
  for (const auto& [k, v] : r.info)
    if (k == key) return v;
  return "";
}

}  // namespace

TEST(Inflate, OneCellsAndCollapse) {
  auto I = inflate_build(fixture("x2"));
  EXPECT_EQ(I->num1(), 3);
  EXPECT_TRUE(I->is_eps(0));
  Word w{I->lift1(1), I->eps(0), I->lift1(0)};
  EXPECT_EQ(I->collapse(w), (Word{1, 0}));
  // eps -> eps has only the formal unit
  EXPECT_EQ(I->hom_size({0}, {0}), 1u);
  EXPECT_TRUE(I->is_formal(I->formal({0}, {0})));
  // (1, eps) -> (1): the cell of X plus the formal unit
  EXPECT_EQ(I->hom_size({I->lift1(1), 0}, {I->lift1(1)}), 2u);
}

TEST(Merge, SequencesAreInternedAndFlattened) {
  auto M = merge_build(fixture("x2"), 4);
  int ab = M->id({0, 1}), ba = M->id({1, 0});
  EXPECT_NE(ab, ba);
  EXPECT_EQ(M->id({0, 1}), ab);
  EXPECT_EQ(M->seq(ab), (Word{0, 1}));
  EXPECT_EQ(M->weight1(ab), 2);
  EXPECT_EQ(M->flatten({ab, ba}), (Word{0, 1, 1, 0}));
  // a cell of M(X) is a cell of X on the flattened boundary
  EXPECT_EQ(M->hom_size({ab}, {M->id({1})}), 1u);
  EXPECT_EQ(M->hom_size({ab}, {M->id({0})}), 0u);
}

TEST(Monads, LawsOnZGAtASmallBudget) {
  Report r = verify_monad_laws(fixture("zg"), Budget{2, 2, 2});
  EXPECT_TRUE(r.ok()) << emit_report(r);
}

TEST(Algebras, CoherentWitnessesGiveAnIAlgebra) {
  SPtr Z = fixture("zg");
  Budget b{2, 2, 3};
  MonadKit kit(Z, b.max_seq);
  ExtractChoices ch = default_choices(*Z, b);
  MPtr alpha = i_algebra_from_choices(kit.inflated("IX"), ch.w, b);
  EXPECT_TRUE(check_i_algebra(kit, alpha, b, 0).ok());
}

TEST(Algebras, PerturbedWitnessesBreakTheIAlgebra) {
  SPtr Z = fixture("zg");
  Budget b{2, 2, 3};
  MonadKit kit(Z, b.max_seq);
  ExtractChoices ch = default_choices(*Z, b);
  UnitWitnesses bad = ch.w;
  for (auto& [a, l] : bad.left)
    for (const Cell& t : hom(*Z, {a}, {a}))
      if (t != *find_unit2(*Z, a, b)) l = cut(*Z, l, 1, t, 1);
  bool broken = false;
  try {
    MPtr alpha = i_algebra_from_choices(kit.inflated("IX"), bad, b);
    broken = !check_i_algebra(kit, alpha, b, 0).ok();
  } catch (const Error&) {
    broken = true;
  }
  EXPECT_TRUE(broken);
}

TEST(Strictify, X2IsSemiStrict) {
  Budget b{3, 3, 3};
  Report r = strictify_report(fixture("x2"), b);
  EXPECT_TRUE(r.ok()) << emit_report(r);
  EXPECT_EQ(info(r, "strict associativity"), "certified");
  EXPECT_EQ(info(r, "unit-associators"), info(r, "triples"));
  EXPECT_EQ(info(r, "equivalence").substr(0, 5), "holds");
}
