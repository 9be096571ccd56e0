#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "polyweave/mergebicat.hpp"
#include "polyweave/polybicat.hpp"

namespace pw {

// A bicategory given by explicit tables. 2-cells are global ids; vertical
// composition is written diagrammatically, v(f, g) = f then g.
struct FiniteBicategory {
  struct Two {
    int src, tgt;  // 1-cells
    std::string name;
  };
  std::string label;
  std::vector<std::string> zero;
  std::vector<OneCell> one;
  std::vector<Two> two;
  std::vector<int> vunit;   // 1-cell -> 2-cell
  std::vector<int> hunit;   // 0-cell -> 1-cell
  std::vector<int> vcomp;   // n2 * n2, -1 when not composable
  std::vector<int> hcomp0;  // n1 * n1
  std::vector<int> hcomp2;  // n2 * n2
  std::map<std::tuple<int, int, int>, int> assoc;  // (a*b)*c -> a*(b*c)
  std::vector<int> lunit, runit;                   // 1x*a -> a, a*1y -> a

  int n0() const { return (int)zero.size(); }
  int n1() const { return (int)one.size(); }
  int n2() const { return (int)two.size(); }
  int v(int f, int g) const { return vcomp[f * n2() + g]; }
  int h(int a, int b) const { return hcomp0[a * n1() + b]; }
  int h2(int f, int g) const { return hcomp2[f * n2() + g]; }
  int alpha(int a, int b, int c) const { return assoc.at({a, b, c}); }
  // 2-cells a -> b in id order
  const std::vector<int>& hom2(int a, int b) const;
  // vertical inverse, or -1
  int inv(int f) const;
  // allocate tables after the cells are listed
  void size_tables();

 private:
  mutable std::map<std::pair<int, int>, std::vector<int>> hom2_;
  mutable std::map<int, int> inv_;
};

// bicategory axioms by exhaustion: vertical category, functoriality of the
// horizontal composite, naturality and invertibility of the structural
// cells, pentagon and triangle
Report check_bicategory_axioms(const FiniteBicategory& B);

// the one-object 2-group on Z/2 with associator given by the cocycle abc
FiniteBicategory zg_source();

// ---- bracketings ----------------------------------------------------------

struct Bracketing {
  int leaf = -1;
  std::shared_ptr<const Bracketing> l, r;
  static Bracketing make_leaf(int a);
  static Bracketing node(Bracketing l, Bracketing r);
  static Bracketing comb(const Word& w);  // ((a1 a2) a3) ...
  Word leaves() const;
  std::string str(const FiniteBicategory& B) const;
};
// parses "((a,b),c)" over the 1-cell names of B
Bracketing parse_bracketing(const FiniteBicategory& B, const std::string& s);
int bracket_cell(const FiniteBicategory& B, const Bracketing& t);

// canonical composite source -> left comb -> target
int rebracket_coherence(const FiniteBicategory& B, const Bracketing& src,
                        const Bracketing& tgt);

// ---- the construction of a merge-bicategory from a bicategory --------------

class GrothStructure : public Structure {
 public:
  explicit GrothStructure(std::shared_ptr<const FiniteBicategory> B)
      : B_(std::move(B)) {}
  std::string label() const override { return "groth(" + B_->label + ")"; }
  int num0() const override { return B_->n0(); }
  std::string name0(int x) const override { return B_->zero[x]; }
  int num1() const override { return B_->n1(); }
  int src(int a) const override { return B_->one[a].src; }
  int tgt(int a) const override { return B_->one[a].tgt; }
  std::string name1(int a) const override { return B_->one[a].name; }
  uint32_t hom_size(const Word& in, const Word& out) const override;
  uint32_t compose(const Cell& t, int j1, int j2, const Cell& s, int i1, int i2,
                   const Word& rin, const Word& rout) const override;
  bool has_merges() const override { return true; }
  std::string tag_name(const Cell& c) const override;

  const FiniteBicategory& base() const { return *B_; }
  int comb(const Word& w) const;
  // the B 2-cell of a cell, and back
  int to_base(const Cell& c) const;
  Cell from_base(const Word& in, const Word& out, int f) const;
  // comb(L) * comb(R) -> comb(L ++ R)
  int to_comb(const Word& L, const Word& R) const;
  // comb(Lw A Rw) -> comb(Lw B Rw) from f: comb A -> comb B
  int whisker(const Word& Lw, int f, const Word& A, const Word& Bw,
              const Word& Rw) const;

 private:
  std::shared_ptr<const FiniteBicategory> B_;
  mutable std::map<Word, int> comb_;
  mutable std::map<std::pair<Word, Word>, int> to_comb_;
  mutable std::map<std::tuple<Cell, int, int, Cell, int, int>, uint32_t> memo_;
};

SPtr groth(std::shared_ptr<const FiniteBicategory> B);

// ---- extraction -------------------------------------------------------------

struct ExtractChoices {
  UnitWitnesses w;                             // coherent witnesses
  std::map<std::pair<int, int>, Cell> tensor;  // t_{a,b}
};

// first-hit tensors and coherentized first-hit witnesses
ExtractChoices default_choices(const Structure& X, const Budget& b);

struct Extracted {
  FiniteBicategory B;
  std::vector<Cell> cells;     // 2-cell id -> unary cell of X
  std::map<Cell, int> index;   // and back
};

Extracted extract_bicategory(const Structure& X, const ExtractChoices& ch,
                             const Budget& b);

struct FunctorData {
  std::vector<int> map0, map1, map2;
  std::map<std::pair<int, int>, int> comp;  // f(a)*f(b) -> f(a*b)
  std::vector<int> unitc;                   // 1_{fx} -> f(1x)
};

Report check_functor_axioms(const FunctorData& F, const FiniteBicategory& B,
                            const FiniteBicategory& C);

FunctorData extract_functor(const Morphism& f, const Structure& X,
                            const Structure& Y, const ExtractChoices& cx,
                            const ExtractChoices& cy, const Extracted& ex,
                            const Extracted& ey, const Budget& b);

struct LinearBicatData {
  Extracted tensor;
  Extracted par;  // extracted from co(X); its cells are read reversed
  std::map<std::tuple<int, int, int>, Cell> delta_l;  // a*(b+c) -> (a*b)+c
  std::map<std::tuple<int, int, int>, Cell> delta_r;  // (a+b)*c -> a+(b*c)
};

LinearBicatData extract_linear(const SPtr& X, const ExtractChoices& tensor,
                               const ExtractChoices& par, const Budget& b);
// boundary shapes of the distributors
Report check_linear_shapes(const Structure& X, const LinearBicatData& L);

// ---- round trip --------------------------------------------------------------

// X -> groth(G X) sending q: G -> D to the factorization of q;T_D through
// T_G, where T_G: G -> (comb G) is built from the chosen tensors; the inverse
// direction is T_G ; f ; T_D^-1, so both composites are identities and the
// unit transformations serve as eta and eps
struct RoundTrip {
  SPtr Y;  // groth of the extracted bicategory
  EquivalenceData E;
};
RoundTrip groth_extract_equivalence(const SPtr& X, const ExtractChoices& ch,
                                    const Extracted& ex, const Budget& b);

// ---- transformations of functors ------------------------------------------------

struct OplaxData {
  std::vector<int> comp0;  // 0-cell -> 1-cell s_x : f x -> g x
  std::vector<int> comp1;  // 1-cell a -> 2-cell fa * s_y -> s_x * ga
};

// composition and unit coherence of an oplax transformation F => G
Report check_oplax_coherence(const OplaxData& S, const FunctorData& F,
                             const FunctorData& G, const FiniteBicategory& B,
                             const FiniteBicategory& C);

// fair transformation of strong morphisms -> oplax transformation of the
// extracted functors
OplaxData transfer_oplax(const Transfor& T, const Structure& X,
                         const Structure& Y, const ExtractChoices& cy,
                         const Extracted& ey, const Budget& b);
// and back
Transfor transfer_oplax_back(const OplaxData& S, MPtr f, MPtr g,
                             const Structure& X, const Structure& Y,
                             const ExtractChoices& cy, const Extracted& ey,
                             const Budget& b);

}  // namespace pw
