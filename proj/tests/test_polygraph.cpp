#include <gtest/gtest.h>

#include <set>

#include "polyweave/polygraph.hpp"
#include "polyweave/structures.hpp"

using namespace pw;

namespace {

// x --a--> y --b--> z, c : x -> z, and m : (a, b) -> (c)
Polygraph chain() {
  Polygraph P;
  P.zero = {"x", "y", "z"};
  P.one = {{"a", "x", "y"}, {"b", "y", "z"}, {"c", "x", "z"}};
  P.two = {{"m", {"a", "b"}, {"c"}}, {"n", {"c"}, {"a", "b"}}};
  return P;
}

}  // namespace

TEST(Polygraph, ValidChainHasNoFindings) {
  EXPECT_TRUE(validate_globularity(chain()).ok());
  EXPECT_TRUE(validate_globularity(polygraph_of(*fixture("b4"), Budget{2, 2, 3})).ok());
}

TEST(Polygraph, ViolationsAreFound) {
  Polygraph P = chain();
  P.two.push_back({"e", {}, {"c"}});
  auto r = validate_globularity(P);
  ASSERT_EQ(r.findings.size(), 1u);
  EXPECT_EQ(r.findings[0].kind, "regularity");

  Polygraph Q = chain();
  std::swap(Q.one[0].src, Q.one[0].tgt);  // a : y -> x, incident to m and n
  auto q = validate_globularity(Q);
  std::set<std::string> cells;
  for (const auto& f : q.findings) {
    EXPECT_EQ(f.kind, "globularity");
    for (const auto& [k, v] : f.fields)
      if (k == "cell") cells.insert(v);
  }
  EXPECT_EQ(cells, (std::set<std::string>{"m", "n"}));

  Polygraph D = chain();
  D.two[0].inputs[0] = "zz";
  EXPECT_EQ(validate_globularity(D).findings[0].kind, "dangling-reference");
}

TEST(Polygraph, DualsAreCommutingInvolutions) {
  for (const Polygraph& P : {chain(), polygraph_of(*fixture("b4"), Budget{2, 2, 3}),
                             polygraph_of(*fixture("x2"), Budget{2, 2, 3})}) {
    EXPECT_EQ(dual(dual(P, DualKind::op), DualKind::op), P);
    EXPECT_EQ(dual(dual(P, DualKind::co), DualKind::co), P);
    EXPECT_EQ(dual(dual(P, DualKind::op), DualKind::co),
              dual(dual(P, DualKind::co), DualKind::op));
  }
  Polygraph co = dual(chain(), DualKind::co);
  EXPECT_EQ(co.two[0].inputs, (std::vector<std::string>{"c"}));
  EXPECT_EQ(co.two[0].outputs, (std::vector<std::string>{"a", "b"}));
  Polygraph op = dual(chain(), DualKind::op);
  EXPECT_EQ(op.one[0].src, "y");
  EXPECT_EQ(op.one[0].tgt, "x");
  EXPECT_EQ(op.two[0].inputs, (std::vector<std::string>{"b", "a"}));
  EXPECT_TRUE(validate_globularity(op).ok());
}

TEST(Polygraph, GlobularTruncation) {
  // B4: one unary cell per pair a <= b of the four-element Boolean algebra
  auto g = truncate_globular(polygraph_of(*fixture("b4"), Budget{3, 3, 4}));
  EXPECT_EQ(g.two.size(), 9u);
  auto x = truncate_globular(polygraph_of(*fixture("x2"), Budget{3, 3, 4}));
  EXPECT_EQ(x.two.size(), 2u);
  EXPECT_TRUE(truncate_globular(chain()).two.empty());
}

TEST(Polygraph, SequenceEnumeration) {
  SPtr X = fixture("x2");
  EXPECT_EQ(enumerate_sequences(*X, 0, 0, 2),
            (std::vector<Word>{{0}, {1}, {0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  EXPECT_EQ(enumerate_sequences(*fixture("zg"), 0, 0, 3).size(), 14u);
  auto seqs = enumerate_sequences(chain(), "x", "z", 3);
  EXPECT_EQ(seqs, (std::vector<std::vector<std::string>>{{"c"}, {"a", "b"}}));
  EXPECT_EQ(enumerate_sequences(chain(), "x", "y", 1),
            (std::vector<std::vector<std::string>>{{"a"}}));
}
