#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polyweave/core.hpp"
#include "polyweave/report.hpp"
#include "polyweave/structures.hpp"

namespace pw {

enum class Side { input, output };
std::string side_mark(Side s, int k1, int k2);  // e.g. "d1-" or "d[1,2]+"

// ---- divisibility ----------------------------------------------------------

// One well-formed equation: the unknown x is glued to t along [k1,k2] of
// t's given side, at position `at` of x's opposite boundary.
struct Equation {
  Word xin, xout;
  int at = 1;
};

// All equations within the budget, in enumeration order.
std::vector<Equation> equations(const Structure& X, const Cell& t, Side side,
                                int k1, int k2, const Budget& b);

// The composite of t with x for the equation.
Cell glue(const Structure& X, const Cell& t, Side side, int k1, int k2,
          const Cell& x, int at);

Certificate is_divisible_at(const Structure& X, const Cell& t, Side side,
                            int k1, int k2, const Budget& b);
inline Certificate is_divisible_at(const Structure& X, const Cell& t,
                                   Side side, int pos, const Budget& b) {
  return is_divisible_at(X, t, side, pos, pos, b);
}
// memoized verdict only
bool divisible(const Structure& X, const Cell& t, Side side, int k1, int k2,
               const Budget& b);
inline bool divisible(const Structure& X, const Cell& t, Side side, int pos,
                      const Budget& b) {
  return divisible(X, t, side, pos, pos, b);
}

// The unique x whose gluing with t at [k1,k2] of t's side gives s.
// `at` is where t's opposite boundary sits inside s.
Cell divide(const Structure& X, const Cell& t, Side side, int k1, int k2,
            const Cell& s, int at);
inline Cell divide(const Structure& X, const Cell& t, Side side, int pos,
                   const Cell& s, int at) {
  return divide(X, t, side, pos, pos, s, at);
}

// ---- 2-units ---------------------------------------------------------------

Certificate is_unit2(const Structure& X, const Cell& p, const Budget& b);
// first certified unit on a 1-cell
std::optional<Cell> find_unit2(const Structure& X, int a, const Budget& b);
std::pair<Cell, Cell> unit2_from_divisible(const Structure& X, const Cell& p);
Cell inverse2(const Structure& X, const Cell& p, const Budget& b);

// ---- representing cells ----------------------------------------------------

enum class Kind { tensor, par, rhom, lhom, rcohom, lcohom };
std::string kind_name(Kind k);

struct Representing {
  int cell1 = -1;
  Cell cell;
  Certificate cert;
};

std::optional<Representing> search_representing(const Structure& X, Kind k,
                                                int a, int b,
                                                const Budget& bud);

// ---- 1-cells ---------------------------------------------------------------

std::optional<Cell> find_left_unitor(const Structure& X, int u, int a,
                                     const Budget& b);
std::optional<Cell> find_right_unitor(const Structure& X, int u, int a,
                                      const Budget& b);

// par variants are obtained by passing make_co(X)
Certificate is_tensor_unit1(const Structure& X, int u, const Budget& b);

enum class Divis { tensor, par };
Certificate is_divisible1(const Structure& X, int e, Divis kind,
                          const Budget& b);
Certificate is_divisible1(const SPtr& X, int e, Divis kind, const Budget& b);

// (e\e, e/e)
std::pair<int, int> unit1_from_divisible1(const Structure& X, int e,
                                          const Budget& b);

// ---- witnesses of unitality ------------------------------------------------

struct UnitWitnesses {
  std::map<int, int> unit1;   // 0-cell -> 1-cell
  std::map<int, Cell> left;   // a -> l_a : (1x, a) -> (a)
  std::map<int, Cell> right;  // a -> r_a : (a, 1y) -> (a)
  bool coherent = false;
  bool operator==(const UnitWitnesses&) const = default;
};

// first certified tensor unit per 0-cell and first doubly divisible witnesses
std::optional<UnitWitnesses> find_unit_witnesses(const Structure& X,
                                                 const Budget& b);

// Checks naturality on both sides and the triangle for every cell in budget.
Report check_witness_coherence(const Structure& X, const UnitWitnesses& w,
                               const Budget& b);

UnitWitnesses coherentize_witnesses(const Structure& X, UnitWitnesses raw,
                                    const Budget& b);

// ---- gluings ----------------------------------------------------------------

// every legal gluing of two cells from the list with result inside b
template <class F>
void for_each_gluing(const Structure& X, const std::vector<Cell>& cells,
                     const Budget& b, F&& fn) {
  // lower cells grouped by input word, so matching is decided once per word
  std::map<Word, std::vector<size_t>> by_in;
  for (size_t k = 0; k < cells.size(); ++k) by_in[cells[k].in].push_back(k);
  for (const Cell& t : cells)
    for (const auto& [sin, group] : by_in) {
      int m = (int)t.out.size(), p = (int)sin.size();
      for (int j1 = 1; j1 <= m; ++j1)
        for (int j2 = j1; j2 <= m; ++j2) {
          if (!X.has_merges() && j2 > j1) break;
          int len = j2 - j1;
          for (int i1 = 1; i1 + len <= p; ++i1) {
            int i2 = i1 + len;
            if (!legal_sides(j1, j2, m, i1, i2, p)) continue;
            bool match = true;
            for (int k = 0; k <= len && match; ++k)
              match = t.out[j1 - 1 + k] == sin[i1 - 1 + k];
            if (!match) continue;
            for (size_t si : group) {
              const Cell& s = cells[si];
              Word rin, rout;
              merge_boundary(t, j1, j2, s, i1, i2, rin, rout);
              if (X.single_output() && rout.size() != 1) continue;
              if (!within(b, X, rin, rout)) continue;
              fn(t, j1, j2, s, i1, i2);
            }
          }
        }
    }
}

std::string gluing_name(const Structure& X, const Cell& t, int j1, int j2,
                        const Cell& s, int i1, int i2);

// ---- morphisms -------------------------------------------------------------

class Morphism {
 public:
  virtual ~Morphism() = default;
  virtual std::string label() const = 0;
  virtual int map0(int x) const = 0;
  virtual int map1(int a) const = 0;
  virtual Cell map2(const Cell& c) const = 0;
  Word map_word(const Word& w) const;
};
using MPtr = std::shared_ptr<const Morphism>;

// Cell-wise map given by explicit 0- and 1-cell maps and a tag function.
class FiniteMorphism : public Morphism {
 public:
  using TagFn = std::function<uint32_t(const Cell&, const Word&, const Word&)>;
  FiniteMorphism(std::string label, std::vector<int> m0, std::vector<int> m1,
                 TagFn tag)
      : label_(std::move(label)),
        m0_(std::move(m0)),
        m1_(std::move(m1)),
        tag_(std::move(tag)) {}
  std::string label() const override { return label_; }
  int map0(int x) const override { return m0_[x]; }
  int map1(int a) const override { return m1_[a]; }
  Cell map2(const Cell& c) const override;

 private:
  std::string label_;
  std::vector<int> m0_, m1_;
  TagFn tag_;
};

MPtr identity_morphism(const Structure& X);

// boundary preservation, validity and commutation with every merge
Report check_morphism(const Morphism& f, const Structure& X,
                      const Structure& Y, const Budget& b);

Report classify_morphism(const Morphism& f, const SPtr& X, const SPtr& Y,
                         const Budget& b);

// ---- adjunctions and representability --------------------------------------

Certificate check_linear_adjunction(const Structure& X, int a, int b, int u,
                                    int w, const Budget& bud);

Report representability_report(const SPtr& X, const Budget& b);

// associativity and interchange instances; for thin structures the
// closure of the predicate under every gluing
Report check_cut_axioms(const Structure& X, const Budget& b);
// every three-cell diagram within b evaluates to a single value
Report check_scheme_instances(const Structure& X, const Budget& b,
                              const std::string& title);

}  // namespace pw
