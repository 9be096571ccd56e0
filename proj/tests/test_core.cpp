#include <gtest/gtest.h>

#include "polyweave/polybicat.hpp"
#include "polyweave/structures.hpp"

using namespace pw;

namespace {

int parity(const Word& w) {
  int s = 0;
  for (int a : w) s += a;
  return s % 2;
}

}  // namespace

TEST(Core, SliceAndCatAreOneBased) {
  Word w{5, 6, 7, 8};
  EXPECT_EQ(slice(w, 2, 3), (Word{6, 7}));
  EXPECT_EQ(cat(Word{1}, Word{2, 3}), (Word{1, 2, 3}));
  EXPECT_EQ(cat(Word{1}, Word{2}, Word{3}), (Word{1, 2, 3}));
}

TEST(Core, CutBoundaryReplacesTheGluedPosition) {
  SPtr X = fixture("x2");
  Cell t{{1, 1}, {0, 1}, 0};  // (1,1) -> (0,1)
  Cell s{{1, 0}, {1}, 0};     // (1,0) -> (1)
  Cell r = cut(*X, t, 2, s, 1);
  EXPECT_EQ(r.in, (Word{1, 1, 0}));
  EXPECT_EQ(r.out, (Word{0, 1}));
}

TEST(Core, CellsWithinMatchesAnIndependentCount) {
  SPtr X = fixture("x2");
  Budget b{2, 2, 3};
  // words over {0,1} of length 1..2 on each side with equal parity
  size_t want = 0;
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; m <= 2; ++m)
      for (int u = 0; u < (1 << n); ++u)
        for (int v = 0; v < (1 << m); ++v)
          want += __builtin_popcount(u) % 2 == __builtin_popcount(v) % 2;
  auto cells = cells_within(*X, b);
  EXPECT_EQ(cells.size(), want);
  for (const Cell& c : cells) EXPECT_EQ(parity(c.in), parity(c.out));
}

TEST(Core, BudgetWeighsBothSides) {
  SPtr X = fixture("x2");
  Budget b{2, 2, 2};
  EXPECT_TRUE(within(b, *X, Word{0, 1}, Word{1}));
  EXPECT_FALSE(within(b, *X, Word{0, 1, 1}, Word{0}));
  EXPECT_FALSE(within(Budget{3, 1, 4}, *X, Word{0}, Word{0, 0}));
}

TEST(Core, SideConditionsOfAGluing) {
  // a middle output into a middle input leaves wires dangling on both sides
  EXPECT_FALSE(legal_sides(2, 2, 3, 2, 2, 3));
  EXPECT_TRUE(legal_sides(1, 1, 1, 2, 2, 3));
  EXPECT_TRUE(legal_sides(2, 2, 3, 1, 1, 1));
  SPtr X = fixture("x2");
  Cell t{{0}, {0, 0, 0}, 0};
  Cell s{{0, 0, 0}, {0}, 0};
  EXPECT_THROW(merge(*X, t, 2, 2, s, 2, 2), IllegalMerge);
  // cut-only structures refuse intervals
  SPtr B = fixture("b4");
  Cell u{{1}, {1, 1}, 0}, v{{1, 1}, {1}, 0};
  EXPECT_THROW(merge(*B, u, 1, 2, v, 1, 2), IllegalMerge);
}

TEST(Core, FixtureRegistryIsComplete) {
  for (const auto& name : fixture_names()) EXPECT_NE(fixture(name), nullptr) << name;
  EXPECT_EQ(fixture("nope"), nullptr);
  EXPECT_EQ(fixture_names().size(), 6u);
}
