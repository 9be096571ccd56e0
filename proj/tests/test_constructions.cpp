#include <gtest/gtest.h>

#include "polyweave/constructions.hpp"

using namespace pw;

namespace {
const Budget kB{3, 3, 4};
}

class ChuX2m : public ::testing::Test {
 protected:
  void SetUp() override {
    M = fixture("x2m");
    C = chu_build(M, kB);
    w = coherentize_witnesses(*M, *find_unit_witnesses(*M, kB), kB);
  }
  SPtr M;
  std::shared_ptr<const ChuStructure> C;
  UnitWitnesses w;
};

TEST_F(ChuX2m, ShapeAndAxioms) {
  EXPECT_EQ(C->num0(), 2);
  EXPECT_EQ(C->num1(), 4);
  EXPECT_TRUE(check_cut_axioms(*C, kB).ok());
  EXPECT_TRUE(check_chu_bands(*C, kB).ok());
}

TEST_F(ChuX2m, DualIsAnInvolutionSwappingEndpoints) {
  for (int A = 0; A < C->num1(); ++A) {
    int D = C->dual(A);
    EXPECT_EQ(C->dual(D), A);
    EXPECT_EQ(C->src(D), C->tgt(A));
    EXPECT_EQ(C->tgt(D), C->src(A));
  }
  EXPECT_TRUE(chu_involution_check(C, kB).holds);
}

TEST_F(ChuX2m, SynthesizedUnitsAreTensorUnits) {
  for (int a = 0; a < C->num0(); ++a) {
    ChuUnit U = chu_unit_synthesize(*C, w, a, kB);
    ASSERT_TRUE(U.holds());
    EXPECT_EQ(C->src(U.unit), a);
    EXPECT_EQ(C->tgt(U.unit), a);
    EXPECT_TRUE(is_tensor_unit1(*C, U.unit, kB).holds);
  }
}

TEST_F(ChuX2m, CounitsGiveLinearAdjunctions) {
  for (int A = 0; A < C->num1(); ++A) {
    auto [eps, cert] = chu_adjunction_witness(*C, w, A, kB);
    EXPECT_TRUE(cert.holds) << C->name1(A);
    EXPECT_EQ(eps.in, (Word{A, C->dual(A)}));
    EXPECT_EQ(eps.out.size(), 1u);
  }
}
