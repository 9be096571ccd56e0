#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polyweave/polybicat.hpp"

namespace pw {

// the 9+8+16 scheme families, or predicate closure for thin structures
Report check_merge_axioms(const Structure& X, const Budget& b);

Certificate is_seq_unit(const Structure& X, const Cell& p, const Budget& b);
std::optional<Cell> find_seq_unit(const Structure& X, const Word& g,
                                  const Budget& b);
Certificate is_divisible_interval(const Structure& X, const Cell& t, Side side,
                                  int k1, int k2, const Budget& b);
// divisible at the whole output and the whole input boundary
bool divisible_full(const Structure& X, const Cell& t, const Budget& b);
// tensor and par divisible in the underlying poly-bicategory
bool divisible1_merge(const SPtr& X, int e, const Budget& b);

// inverse along the full boundary
Cell invert2(const Structure& X, const Cell& p, const Budget& b);

Report merge_representability_report(const SPtr& X, const Budget& b);

SPtr underlying_polybicat(SPtr X);

// ---- morphisms ---------------------------------------------------------------

// g after f
MPtr compose_morphisms(MPtr f, MPtr g);

// all morphisms X -> Y agreeing with the merges inside b
std::vector<MPtr> enumerate_morphisms(const Structure& X, const Structure& Y,
                                      const Budget& b, size_t limit = 64);

// ---- transformations ----------------------------------------------------------

struct Transfor {
  enum class Kind { oplax, modification };
  Kind kind = Kind::oplax;
  std::string label;
  // oplax: src, tgt morphisms; comp0 on 0-cells, comp1 on universe 1-cells
  MPtr src, tgt;
  std::vector<int> comp0;
  std::map<int, Cell> comp1;
  // modification: sequences of transformations and one 2-cell per 0-cell
  std::vector<Transfor> msrc, mtgt;
  std::vector<Cell> comp_cell;
};

// (f(a1..an), s_y) -> (s_x, g(a1..an)) for a composable word
Cell transfor_ladder(const Structure& Y, const Transfor& s, const Word& w);
// (f0(a), s1_y..sn_y) -> (s1_x..sn_x, fn(a)) for composable transformations
Cell transfor_tower(const Structure& Y, const std::vector<Transfor>& ss, int a);

// the identity transformation on f, from 1-units and unit witnesses of Y
Transfor identity_transfor(const Structure& X, const Structure& Y, MPtr f,
                           const UnitWitnesses& wy, const Budget& b);

Report validate_transfor(const Transfor& T, const SPtr& X, const SPtr& Y,
                         const Budget& b);

struct EquivalenceData {
  MPtr f, g;          // X -> Y, Y -> X
  Transfor eta, eps;  // id -> g f, id -> f g
};

Certificate verify_equivalence(const EquivalenceData& E, const SPtr& X,
                               const SPtr& Y, const Budget& b);

// ---- the left hom -------------------------------------------------------------

class HomObject : public Structure {
 public:
  HomObject(SPtr X, SPtr Y, Budget b, size_t limit = 64);
  std::string label() const override;
  int num0() const override { return (int)morphisms_.size(); }
  std::string name0(int x) const override { return "f" + std::to_string(x); }
  int num1() const override { return (int)transfors_.size(); }
  int src(int a) const override { return src_[a]; }
  int tgt(int a) const override { return tgt_[a]; }
  std::string name1(int a) const override { return "s" + std::to_string(a); }
  uint32_t hom_size(const Word& in, const Word& out) const override;
  uint32_t compose(const Cell& t, int j1, int j2, const Cell& s, int i1, int i2,
                   const Word& rin, const Word& rout) const override;
  bool has_merges() const override { return true; }
  std::string tag_name(const Cell& c) const override;

  const MPtr& morphism(int x) const { return morphisms_[x]; }
  const Transfor& transfor(int a) const { return transfors_[a]; }
  // components of a 2-cell, one per 0-cell of X
  const std::vector<Cell>& components(const Cell& c) const;

 private:
  const std::vector<std::vector<Cell>>& mods(const Word& in,
                                             const Word& out) const;
  SPtr X_, Y_;
  Budget b_;
  std::vector<MPtr> morphisms_;
  std::vector<Transfor> transfors_;
  std::vector<int> src_, tgt_;
  mutable std::map<std::pair<Word, Word>, std::vector<std::vector<Cell>>> mods_;
};

}  // namespace pw
