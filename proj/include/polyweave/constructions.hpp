#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "polyweave/polybicat.hpp"

namespace pw {

// A : a -> b with its partner A' : b -> a and e_A : (A, A') -> (a),
// e_A' : (A', A) -> (b). a and b are 0-cells of the Chu structure.
struct ChuOneCell {
  int a = 0, b = 0;
  int A = 0, Adual = 0;  // 1-cells of M
  Cell eA, eAdual;       // 2-cells of M
  bool operator==(const ChuOneCell&) const = default;
};

// one 2-cell of M per position of the cyclic type
using Band = std::vector<Cell>;

class ChuStructure : public Structure {
 public:
  ChuStructure(SPtr M, Budget b);
  std::string label() const override { return "Chu(" + M_->label() + ")"; }
  int num0() const override { return (int)endo_.size(); }
  std::string name0(int x) const override { return M_->name1(endo_[x]); }
  int num1() const override { return (int)one_.size(); }
  int src(int a) const override { return one_[a].a; }
  int tgt(int a) const override { return one_[a].b; }
  std::string name1(int a) const override;
  uint32_t hom_size(const Word& in, const Word& out) const override;
  uint32_t compose(const Cell& t, int j1, int j2, const Cell& s, int i1, int i2,
                   const Word& rin, const Word& rout) const override;
  bool has_merges() const override { return false; }
  bool thin() const override { return M_->thin(); }
  std::string tag_name(const Cell& c) const override;

  const Structure& base() const { return *M_; }
  int endo(int x) const { return endo_[x]; }
  const ChuOneCell& one(int A) const { return one_[A]; }
  int dual(int A) const { return dual_[A]; }
  Word dual_word(const Word& w) const;
  // index of a 1-cell with these fields, or -1
  int find(const ChuOneCell& c) const;
  // (A1..An, Bm'..B1')
  Word type(const Word& in, const Word& out) const;
  // the equations of a band of the given type; empty string when valid
  std::string band_failure(const Word& type, const Band& p) const;
  const std::vector<Band>& bands(const Word& in, const Word& out) const;
  const Band& band(const Cell& c) const { return bands(c.in, c.out).at(c.tag); }
  // the cell carrying a band; throws if the band is not valid
  Cell cell_of(const Word& in, const Word& out, const Band& p) const;

 private:
  SPtr M_;
  Budget b_;
  std::vector<int> endo_;          // 0-cell -> endo 1-cell of M
  std::vector<ChuOneCell> one_;
  std::vector<int> dual_;
  mutable std::map<std::pair<Word, Word>, std::vector<Band>> bands_;
};

std::shared_ptr<const ChuStructure> chu_build(SPtr M, const Budget& b);

// every stored band satisfies its cyclic equations and every cut is defined
Report check_chu_bands(const ChuStructure& C, const Budget& b);

struct ChuUnit {
  int a = 0;     // 0-cell of the Chu structure
  int unit = -1;  // 1_a
  std::map<int, Cell> left, right;  // A -> l_A : (1_a, A) -> (A), r_A : (A, 1_b) -> (A)
  std::vector<Certificate> certs;
  bool holds() const;
};

// 1_a = (1_x, a, l_a, r_a) from coherent witnesses of M
ChuUnit chu_unit_synthesize(const ChuStructure& C, const UnitWitnesses& w,
                            int a, const Budget& b);

// (-)' : Chu(M) -> co(op(Chu(M))) is an involutive isomorphism
Certificate chu_involution_check(const std::shared_ptr<const ChuStructure>& C,
                                 const Budget& b);
MPtr chu_involution(const std::shared_ptr<const ChuStructure>& C);

// e_A : (A, A') -> (1_a') with components (r_A', l_A, e_A); the certificate
// covers divisibility at both inputs and the linear adjunction A' -| A
std::pair<Cell, Certificate> chu_adjunction_witness(const ChuStructure& C,
                                                    const UnitWitnesses& w,
                                                    int A, const Budget& b);

}  // namespace pw
