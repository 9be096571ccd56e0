#include <gtest/gtest.h>

#include "polyweave/io.hpp"
#include "polyweave/polybicat.hpp"
#include "suites.hpp"

using namespace pw;

namespace {

const Budget kB{3, 3, 4};

// 0, 1, p, ~p as subsets of a two-point set
int bits(int a) { return std::vector<int>{0, 3, 1, 2}[a]; }
int of_bits(int v) {
  for (int a = 0; a < 4; ++a)
    if (bits(a) == v) return a;
  return -1;
}

std::string info(const Report& r, const std::string& key) {
  for (const auto& [k, v] : r.info)
    if (k == key) return v;
  return "";
}

}  // namespace

TEST(Boolean, HomsAreImplication) {
  SPtr B = fixture("b4");
  for (int a = 0; a < 4; ++a)
    for (int c = 0; c < 4; ++c) {
      int want = of_bits((~bits(a) | bits(c)) & 3);
      auto r = search_representing(*B, Kind::rhom, a, c, kB);
      auto l = search_representing(*B, Kind::lhom, a, c, kB);
      ASSERT_TRUE(r && l);
      EXPECT_EQ(r->cell1, want);
      EXPECT_EQ(l->cell1, want);
    }
}

TEST(Boolean, TensorIsMeetAndParIsJoin) {
  SPtr B = fixture("b4");
  for (int a = 0; a < 4; ++a)
    for (int c = 0; c < 4; ++c) {
      auto t = search_representing(*B, Kind::tensor, a, c, kB);
      auto p = search_representing(*B, Kind::par, a, c, kB);
      ASSERT_TRUE(t && p);
      EXPECT_EQ(t->cell1, of_bits(bits(a) & bits(c)));
      EXPECT_EQ(p->cell1, of_bits(bits(a) | bits(c)));
    }
}

TEST(Boolean, OnlyTopIsATensorUnitAndTensorDivisible) {
  SPtr B = fixture("b4");
  for (int a = 0; a < 4; ++a) {
    EXPECT_EQ(is_tensor_unit1(*B, a, kB).holds, a == 1) << a;
    EXPECT_EQ(is_divisible1(B, a, Divis::tensor, kB).holds, a == 1) << a;
  }
  Report r = representability_report(B, kB);
  EXPECT_EQ(info(r, "unital"), "holds");
  EXPECT_EQ(info(r, "tensor-divisible"), "1");
  EXPECT_EQ(info(r, "star-autonomous"), "holds");
}

TEST(Boolean, TwoOutOfThreeProperty) {
  auto r = test::two_out_of_three(fixture("b4"), kB);
  EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures[0]);
  EXPECT_GT(r.checked, 0u);
}

TEST(Boolean, OnlyIdentitiesAreInvertible) {
  SPtr B = fixture("b4");
  for (int a = 0; a < 4; ++a)
    for (int c = 0; c < 4; ++c) {
      auto h = hom(*B, {a}, {c});
      if (h.empty()) continue;
      bool inv = divisible(*B, h[0], Side::output, 1, kB);
      EXPECT_EQ(inv, a == c) << a << " " << c;
    }
  auto r = test::merge_unital(fixture("b4"), kB);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.instances, 4u);
}

TEST(Divisibility, CounterexampleNamesTheEquation) {
  SPtr B = fixture("b4");
  // 0 -> 1 cannot be divided at its output: 1 -> 0 has no factorization
  Cell t{{0}, {1}, 0};
  Certificate c = is_divisible_at(*B, t, Side::output, 1, kB);
  EXPECT_FALSE(c.holds);
  ASSERT_TRUE(c.counterexample.has_value());
  std::string line = emit_certificate(c, false);
  EXPECT_NE(line.find("verdict=fails"), std::string::npos);
  EXPECT_NE(line.find(side_mark(Side::output, 1, 1)), std::string::npos) << line;
}

TEST(Mod2, TensorAndHomsFollowParity) {
  SPtr X = fixture("x2m");
  Budget b{3, 1, 4};
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c) {
      auto t = search_representing(*X, Kind::tensor, a, c, b);
      auto r = search_representing(*X, Kind::rhom, a, c, b);
      ASSERT_TRUE(t && r);
      EXPECT_EQ(t->cell1, (a + c) % 2);
      EXPECT_EQ(r->cell1, (a + c) % 2);
    }
  EXPECT_TRUE(is_divisible1(X, 1, Divis::tensor, b).holds);
  EXPECT_FALSE(is_divisible1(fixture("yn"), 1, Divis::tensor, b).holds);
}

TEST(Mod2, InclusionIntoNaturalsIsNotTensorStrong) {
  SPtr X = fixture("x2m"), Y = fixture("yn");
  Budget b{3, 1, 4};
  std::vector<int> m0{0}, m1{0, 1};
  auto iota = std::make_shared<FiniteMorphism>(
      "iota", m0, m1, [](const Cell&, const Word&, const Word&) { return 0u; });
  EXPECT_TRUE(check_morphism(*iota, *X, *Y, b).ok());
  Report cl = classify_morphism(*iota, X, Y, b);
  EXPECT_EQ(info(cl, "unital").substr(0, 5), "holds");
  EXPECT_EQ(info(cl, "preserves-right-homs").substr(0, 5), "holds");
  EXPECT_EQ(info(cl, "tensor-strong").substr(0, 5), "fails");
  // 1 (x) 1 = 0 in X2m, but 1 + 1 = 2 in YN
  EXPECT_EQ(info(cl, "preserves-tensors").substr(0, 5), "fails");
}

TEST(Morphisms, ParitySwapIsNotAMorphismOfX2) {
  SPtr X = fixture("x2");
  auto swap = std::make_shared<FiniteMorphism>(
      "swap", std::vector<int>{0}, std::vector<int>{1, 0},
      [](const Cell&, const Word&, const Word&) { return 0u; });
  // (0) -> (0) would go to (1) -> (1), fine; (1,1) -> (0) goes to (0,0) -> (1)
  EXPECT_FALSE(check_morphism(*swap, *X, *X, Budget{2, 2, 3}).ok());
  EXPECT_TRUE(check_morphism(*identity_morphism(*X), *X, *X, Budget{2, 2, 3}).ok());
}

TEST(CutAxioms, HoldOnThinFixtures) {
  for (const char* f : {"b4", "s1", "yn"})
    EXPECT_TRUE(check_cut_axioms(*fixture(f), Budget{3, 1, 4}).ok()) << f;
}

TEST(CutAxioms, NonTransitiveOrderIsCaught) {
  // 0 <= p <= 1 but 0 -> 1 missing: the closure check must object
  auto pred = [](const Word& in, const Word& out) {
    if (in.size() != 1 || out.size() != 1) return false;
    int a = in[0], c = out[0];
    return a == c || (a == 0 && c == 2) || (a == 2 && c == 1);
  };
  auto X = std::make_shared<ThinStructure>(
      "broken", std::vector<std::string>{"*"},
      std::vector<OneCell>{{"0"}, {"1"}, {"p"}}, pred, false, true);
  EXPECT_FALSE(check_cut_axioms(*X, Budget{1, 1, 2}).ok());
}

TEST(Witnesses, CoherentizationRepairsPerturbedZG) {
  SPtr Z = fixture("zg");
  auto raw = find_unit_witnesses(*Z, kB);
  ASSERT_TRUE(raw);
  UnitWitnesses bad = *raw;
  for (auto& [a, r] : bad.right)
    for (const Cell& t : hom(*Z, {a}, {a}))
      if (t != *find_unit2(*Z, a, kB)) r = cut(*Z, r, 1, t, 1);
  EXPECT_FALSE(test::coherence_by_gluing(*Z, bad, kB).ok());
  EXPECT_FALSE(check_witness_coherence(*Z, bad, kB).ok());
  UnitWitnesses w = coherentize_witnesses(*Z, bad, kB);
  auto c = test::coherence_by_gluing(*Z, w, kB);
  EXPECT_TRUE(c.ok()) << (c.failures.empty() ? "" : c.failures[0]);
  EXPECT_TRUE(check_witness_coherence(*Z, w, kB).ok());
  EXPECT_TRUE(w.coherent);
}

TEST(Witnesses, CoherentizationIsIdempotent) {
  SPtr X = fixture("x2");
  auto raw = find_unit_witnesses(*X, kB);
  ASSERT_TRUE(raw);
  UnitWitnesses w = coherentize_witnesses(*X, *raw, kB);
  EXPECT_EQ(coherentize_witnesses(*X, w, kB), w);
}
