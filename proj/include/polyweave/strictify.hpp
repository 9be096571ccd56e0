#pragma once

#include <deque>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "polyweave/bicat.hpp"
#include "polyweave/mergebicat.hpp"

namespace pw {

// ---- I(X) ----------------------------------------------------------------------
//
// 1-cells: eps_x has id x; a 1-cell a of X has id a + num0.
// A cell is its decorated boundary plus a core: a cell of X between the
// collapsed boundaries (tag < hom_size of X) or the formal unit (the last tag,
// present when both boundaries collapse to the same sequence).
class InflatedStructure : public Structure {
 public:
  explicit InflatedStructure(SPtr X);
  std::string label() const override { return "I(" + X_->label() + ")"; }
  int num0() const override { return n0_; }
  std::string name0(int x) const override { return X_->name0(x); }
  int num1() const override { return n0_ + X_->num1(); }
  int src(int u) const override;
  int tgt(int u) const override;
  std::string name1(int u) const override;
  int weight1(int u) const override;
  uint32_t hom_size(const Word& in, const Word& out) const override;
  uint32_t compose(const Cell& t, int j1, int j2, const Cell& s, int i1, int i2,
                   const Word& rin, const Word& rout) const override;
  bool has_merges() const override { return true; }
  std::string tag_name(const Cell& c) const override;

  const SPtr& base_ptr() const { return X_; }
  const Structure& base() const { return *X_; }
  int eps(int x) const { return x; }
  bool is_eps(int u) const { return u < n0_; }
  int lift1(int a) const { return a + n0_; }
  int lower1(int u) const { return u - n0_; }
  Word lift_word(const Word& w) const;
  // drop the eps, in ids of X
  Word collapse(const Word& w) const;
  uint32_t formal_tag(const Word& in, const Word& out) const;
  bool is_formal(const Cell& c) const;
  // the core of a non-formal cell as a cell of X
  Cell core(const Cell& c) const;
  // p with the decorated boundary (in, out)
  Cell decorate(const Cell& p, const Word& in, const Word& out) const;
  Cell formal(const Word& in, const Word& out) const;

 private:
  SPtr X_;
  int n0_;
};

// ---- M(X) ----------------------------------------------------------------------
//
// 1-cells: nonempty composable sequences <G>; the universe holds the
// sequences of universe 1-cells of total weight <= max_weight, longer ones
// get ids on demand. A cell is a cell of X on the flattened boundaries; its
// words of M(X) carry the partitions.
class MergedStructure : public Structure {
 public:
  MergedStructure(SPtr X, int max_weight);
  std::string label() const override { return "M(" + X_->label() + ")"; }
  int num0() const override { return X_->num0(); }
  std::string name0(int x) const override { return X_->name0(x); }
  int num1() const override { return universe_; }
  int src(int a) const override { return X_->src(seqs_[a].front()); }
  int tgt(int a) const override { return X_->tgt(seqs_[a].back()); }
  std::string name1(int a) const override;
  int weight1(int a) const override { return weights_[a]; }
  uint32_t hom_size(const Word& in, const Word& out) const override;
  uint32_t compose(const Cell& t, int j1, int j2, const Cell& s, int i1, int i2,
                   const Word& rin, const Word& rout) const override;
  bool has_merges() const override { return true; }
  std::string tag_name(const Cell& c) const override;

  const SPtr& base_ptr() const { return X_; }
  const Structure& base() const { return *X_; }
  int max_weight() const { return max_weight_; }
  int id(const Word& seq) const;
  const Word& seq(int a) const { return seqs_[a]; }
  Word flatten(const Word& w) const;
  Cell flat(const Cell& c) const { return {flatten(c.in), flatten(c.out), c.tag}; }
  // the cell of X partitioned by the blocks in, out
  Cell group(const Cell& p, const Word& in, const Word& out) const;
  // blocks of the given lengths
  Word blocks(const Word& w, const std::vector<int>& sizes) const;

 private:
  SPtr X_;
  int max_weight_;
  int universe_ = 0;
  mutable std::deque<Word> seqs_;
  mutable std::deque<int> weights_;
  mutable std::map<Word, int> ids_;
};

std::shared_ptr<const InflatedStructure> inflate_build(SPtr X);
std::shared_ptr<const MergedStructure> merge_build(SPtr X, int max_weight);

// ---- the monads and the distributive law ---------------------------------------
//
// Structures are named by paths read right to left: "X", "IX", "MIX" = M(I(X)).
// All maps between the same paths share structure instances, so cells can be
// compared literally.
class MonadKit {
 public:
  MonadKit(SPtr X, int max_weight);
  SPtr get(const std::string& path) const;
  std::shared_ptr<const InflatedStructure> inflated(const std::string& path) const;
  std::shared_ptr<const MergedStructure> merged(const std::string& path) const;

  MPtr eta(const std::string& p) const;    // p -> Ip
  MPtr mu(const std::string& p) const;     // IIp -> Ip
  MPtr zeta(const std::string& p) const;   // p -> Mp
  MPtr nu(const std::string& p) const;     // MMp -> Mp
  MPtr sigma(const std::string& p) const;  // IMp -> MIp
  MPtr lift_I(MPtr f, const std::string& dom, const std::string& cod) const;
  MPtr lift_M(MPtr f, const std::string& dom, const std::string& cod) const;
  // T = M I
  MPtr eta_T(const std::string& p) const;  // p -> MIp
  MPtr mu_T(const std::string& p) const;   // MIMIp -> MIp
  MPtr lift_T(MPtr f, const std::string& dom, const std::string& cod) const;

 private:
  SPtr X_;
  int max_weight_;
  mutable std::map<std::string, SPtr> cache_;
};

// unit and associativity laws of I, M and T and the four axioms of the
// distributive law, on every cell within b of each domain (every k-th cell
// when sample > 0)
Report verify_monad_laws(const SPtr& X, const Budget& b, size_t sample = 0);

// ---- algebras -------------------------------------------------------------------

// alpha : I(X) -> X from coherent unit witnesses
MPtr i_algebra_from_choices(const std::shared_ptr<const InflatedStructure>& IX,
                            const UnitWitnesses& w, const Budget& b);

// alpha a strong morphism, alpha eta = id and alpha I(alpha) = alpha mu
Report check_i_algebra(const MonadKit& kit, const MPtr& alpha, const Budget& b,
                       size_t sample = 0);

struct TAlgebraData {
  std::shared_ptr<MonadKit> kit;  // over the base X of the carrier
  std::shared_ptr<const MergedStructure> carrier;  // "MX"
  SPtr domain;                                     // T(carrier) = "MIMX"
  MPtr beta;
};

// beta = M(alpha) nu_{IX} M(sigma_X)
TAlgebraData t_algebra_on_merge(std::shared_ptr<MonadKit> kit, MPtr alpha);

// beta eta_T = id and beta T(beta) = beta mu_T on samples, optionally strength
Report check_t_algebra(const TAlgebraData& A, const Budget& b, size_t sample,
                       bool strength);

struct Strictified {
  TAlgebraData beta;
  MPtr zeta;       // X -> M(X)
  MPtr fold;       // M(X) -> X through the chosen tensors
  EquivalenceData E;
};

Strictified semi_strictify(const SPtr& X, const ExtractChoices& ch,
                           const Budget& b);

// literal equality of bracketed triple tensors, associators are units,
// unitors counted
Report verify_strict_associativity(const TAlgebraData& A, const Budget& b);

// the whole pipeline with default choices, one report
Report strictify_report(const SPtr& X, const Budget& b);

}  // namespace pw
