#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace pw {

// A word is a sequence of 1-cell ids. Positions in the API are 1-based.
using Word = std::vector<int>;

struct Cell {
  Word in;
  Word out;
  uint32_t tag = 0;

  bool operator==(const Cell&) const = default;
  auto operator<=>(const Cell&) const = default;
};

struct Budget {
  int max_in = 3;
  int max_out = 3;
  int max_seq = 4;

  auto operator<=>(const Budget&) const = default;
  std::string str() const;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};
class IllegalMerge : public Error {
 public:
  using Error::Error;
};
class NoSolution : public Error {
 public:
  using Error::Error;
};
class NonUniqueSolution : public Error {
 public:
  using Error::Error;
};
class NotDivisible : public Error {
 public:
  using Error::Error;
};

// A regular poly-bicategory or merge-bicategory, presented intensionally.
// 1-cells 0..num1()-1 form the enumeration universe; lazy structures may
// hand out larger ids as results of composition.
// Cells with the same boundary are told apart by a tag in [0, hom_size).
class Structure {
 public:
  virtual ~Structure() = default;

  virtual std::string label() const = 0;

  virtual int num0() const = 0;
  virtual std::string name0(int x) const = 0;

  virtual int num1() const = 0;
  virtual int src(int a) const = 0;
  virtual int tgt(int a) const = 0;
  virtual std::string name1(int a) const = 0;
  // size of a 1-cell for budget purposes (flattened length for M(X))
  virtual int weight1(int) const { return 1; }

  virtual uint32_t hom_size(const Word& in, const Word& out) const = 0;

  // tag of the composite; boundary and legality already checked by merge()
  virtual uint32_t compose(const Cell& t, int j1, int j2, const Cell& s,
                           int i1, int i2, const Word& rin,
                           const Word& rout) const = 0;

  // false: only singleton intervals (cuts) are defined
  virtual bool has_merges() const = 0;
  // at most one output per 2-cell
  virtual bool single_output() const { return false; }
  // at most one 2-cell per boundary
  virtual bool thin() const { return false; }

  virtual std::string tag_name(const Cell& c) const;

  // cached enumeration helpers
  const std::vector<Word>& words(int x, int y, int maxlen, int maxw) const;
  const std::vector<int>& out_edges(int x) const;
  int weight(const Word& w) const;

  // memo tables for derived verdicts; values depend only on the structure
  struct DivKey {
    Cell t;
    int side, k1, k2;
    Budget b;
    auto operator<=>(const DivKey&) const = default;
  };
  mutable std::map<DivKey, bool> div_memo;
  mutable std::map<std::string, std::vector<Cell>> cell_memo;

 private:
  mutable std::map<std::tuple<int, int, int, int>, std::vector<Word>> words_;
  mutable std::vector<std::vector<int>> out_edges_;
};

// ---- boundary algebra ------------------------------------------------------

Word slice(const Word& w, int from, int to);  // 1-based, inclusive
Word cat(const Word& a, const Word& b);
Word cat(const Word& a, const Word& b, const Word& c);
int word_src(const Structure& X, const Word& w);
int word_tgt(const Structure& X, const Word& w);
bool composable(const Structure& X, const Word& w);
bool parallel(const Structure& X, const Word& a, const Word& b);

// the side conditions of the gluing square
bool legal_sides(int j1, int j2, int m, int i1, int i2, int p);

void merge_boundary(const Cell& t, int j1, int j2, const Cell& s, int i1,
                    int i2, Word& rin, Word& rout);

Cell merge(const Structure& X, const Cell& t, int j1, int j2, const Cell& s,
           int i1, int i2);
Cell cut(const Structure& X, const Cell& t, int j, const Cell& s, int i);

// a cell is a valid element of X
bool valid_cell(const Structure& X, const Cell& c);

std::string show_word(const Structure& X, const Word& w);
std::string show(const Structure& X, const Cell& c);

bool within(const Budget& b, const Structure& X, const Cell& c);
bool within(const Budget& b, const Structure& X, const Word& in,
            const Word& out);

// all cells of X with boundary inside the budget, in deterministic order
std::vector<Cell> cells_within(const Structure& X, const Budget& b);
// all cells with the given boundary
std::vector<Cell> hom(const Structure& X, const Word& in, const Word& out);

// A finite diagram of cells glued along boundary positions. Evaluated by
// trying every legal order of pairwise merges; associativity and
// interchange say all orders agree.
struct Diagram {
  struct Glue {
    int top, top_pos;  // output position of the upper cell
    int bot, bot_pos;  // input position of the lower cell
  };
  std::vector<Cell> cells;
  std::vector<Glue> glue;
};

// every value obtainable by a legal evaluation order (empty set = stuck)
std::vector<Cell> evaluate_all(const Structure& X, const Diagram& d,
                               size_t limit = 0);
// first legal evaluation; throws IllegalMerge if none
Cell evaluate(const Structure& X, const Diagram& d);

}  // namespace pw
