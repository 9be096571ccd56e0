#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "polyweave/core.hpp"

namespace pw {

using SPtr = std::shared_ptr<const Structure>;

struct OneCell {
  std::string name;
  int src = 0, tgt = 0;
};

// Shared globe data for explicitly listed 0- and 1-cells.
class Globe : public Structure {
 public:
  Globe(std::string label, std::vector<std::string> zero,
        std::vector<OneCell> one)
      : label_(std::move(label)), zero_(std::move(zero)), one_(std::move(one)) {}

  std::string label() const override { return label_; }
  int num0() const override { return (int)zero_.size(); }
  std::string name0(int x) const override { return zero_[x]; }
  int num1() const override { return (int)one_.size(); }
  int src(int a) const override { return one_[a].src; }
  int tgt(int a) const override { return one_[a].tgt; }
  std::string name1(int a) const override { return one_[a].name; }

  int find1(const std::string& name) const;
  int find0(const std::string& name) const;

 protected:
  std::string label_;
  std::vector<std::string> zero_;
  std::vector<OneCell> one_;
};

// At most one 2-cell per boundary, given by a predicate.
class ThinStructure : public Globe {
 public:
  using Pred = std::function<bool(const Word&, const Word&)>;
  ThinStructure(std::string label, std::vector<std::string> zero,
                std::vector<OneCell> one, Pred pred, bool merges,
                bool single_output)
      : Globe(std::move(label), std::move(zero), std::move(one)),
        pred_(std::move(pred)),
        merges_(merges),
        single_(single_output) {}

  uint32_t hom_size(const Word& in, const Word& out) const override;
  uint32_t compose(const Cell&, int, int, const Cell&, int, int, const Word&,
                   const Word&) const override {
    return 0;
  }
  bool has_merges() const override { return merges_; }
  bool single_output() const override { return single_; }
  bool thin() const override { return true; }

 private:
  Pred pred_;
  bool merges_, single_;
};

class IncompleteTable : public Error {
 public:
  using Error::Error;
};

// Explicit cells and an explicit composition table, valid inside a budget.
class TabularStructure : public Globe {
 public:
  struct Key {
    Cell t;
    int j1, j2;
    Cell s;
    int i1, i2;
    auto operator<=>(const Key&) const = default;
  };

  TabularStructure(std::string label, std::vector<std::string> zero,
                   std::vector<OneCell> one, Budget table_budget, bool merges,
                   bool single_output)
      : Globe(std::move(label), std::move(zero), std::move(one)),
        table_budget_(table_budget),
        merges_(merges),
        single_(single_output) {}

  // returns the tag of the new cell
  uint32_t add_cell(const Word& in, const Word& out, std::string name);
  void set_entry(const Key& k, uint32_t tag) { table_[k] = tag; }
  const std::map<Key, uint32_t>& table() const { return table_; }
  const std::map<std::pair<Word, Word>, std::vector<std::string>>& cells()
      const {
    return cells_;
  }
  const Budget& table_budget() const { return table_budget_; }
  int find_cell(const Word& in, const Word& out, const std::string& name) const;

  uint32_t hom_size(const Word& in, const Word& out) const override;
  uint32_t compose(const Cell& t, int j1, int j2, const Cell& s, int i1, int i2,
                   const Word& rin, const Word& rout) const override;
  bool has_merges() const override { return merges_; }
  bool single_output() const override { return single_; }
  std::string tag_name(const Cell& c) const override;

 private:
  Budget table_budget_;
  bool merges_, single_;
  std::map<std::pair<Word, Word>, std::vector<std::string>> cells_;
  std::map<Key, uint32_t> table_;
};

// Snapshot of a structure inside a budget as an explicit table.
std::shared_ptr<TabularStructure> tabulate(const Structure& X, const Budget& b);

// op reverses 1-cells and the order of both boundaries; co swaps
// inputs and outputs.
class OpView : public Structure {
 public:
  explicit OpView(SPtr X) : X_(std::move(X)) {}
  std::string label() const override { return "op(" + X_->label() + ")"; }
  int num0() const override { return X_->num0(); }
  std::string name0(int x) const override { return X_->name0(x); }
  int num1() const override { return X_->num1(); }
  int src(int a) const override { return X_->tgt(a); }
  int tgt(int a) const override { return X_->src(a); }
  std::string name1(int a) const override { return X_->name1(a); }
  int weight1(int a) const override { return X_->weight1(a); }
  uint32_t hom_size(const Word& in, const Word& out) const override;
  uint32_t compose(const Cell& t, int j1, int j2, const Cell& s, int i1, int i2,
                   const Word& rin, const Word& rout) const override;
  bool has_merges() const override { return X_->has_merges(); }
  bool single_output() const override { return X_->single_output(); }
  bool thin() const override { return X_->thin(); }
  std::string tag_name(const Cell& c) const override;
  const SPtr& base() const { return X_; }

  static Cell to_base(const Cell& c);

 private:
  SPtr X_;
};

class CoView : public Structure {
 public:
  explicit CoView(SPtr X) : X_(std::move(X)) {}
  std::string label() const override { return "co(" + X_->label() + ")"; }
  int num0() const override { return X_->num0(); }
  std::string name0(int x) const override { return X_->name0(x); }
  int num1() const override { return X_->num1(); }
  int src(int a) const override { return X_->src(a); }
  int tgt(int a) const override { return X_->tgt(a); }
  std::string name1(int a) const override { return X_->name1(a); }
  int weight1(int a) const override { return X_->weight1(a); }
  uint32_t hom_size(const Word& in, const Word& out) const override {
    return X_->hom_size(out, in);
  }
  uint32_t compose(const Cell& t, int j1, int j2, const Cell& s, int i1, int i2,
                   const Word& rin, const Word& rout) const override;
  bool has_merges() const override { return X_->has_merges(); }
  bool single_output() const override { return false; }
  bool thin() const override { return X_->thin(); }
  std::string tag_name(const Cell& c) const override;
  const SPtr& base() const { return X_; }

  static Cell to_base(const Cell& c) { return {c.out, c.in, c.tag}; }

 private:
  SPtr X_;
};

// Forgets interval merges, keeping singleton cuts.
class UnderlyingPoly : public Structure {
 public:
  explicit UnderlyingPoly(SPtr X) : X_(std::move(X)) {}
  std::string label() const override { return "U1(" + X_->label() + ")"; }
  int num0() const override { return X_->num0(); }
  std::string name0(int x) const override { return X_->name0(x); }
  int num1() const override { return X_->num1(); }
  int src(int a) const override { return X_->src(a); }
  int tgt(int a) const override { return X_->tgt(a); }
  std::string name1(int a) const override { return X_->name1(a); }
  int weight1(int a) const override { return X_->weight1(a); }
  uint32_t hom_size(const Word& in, const Word& out) const override {
    return X_->hom_size(in, out);
  }
  uint32_t compose(const Cell& t, int j1, int j2, const Cell& s, int i1, int i2,
                   const Word& rin, const Word& rout) const override {
    return X_->compose(t, j1, j2, s, i1, i2, rin, rout);
  }
  bool has_merges() const override { return false; }
  bool single_output() const override { return X_->single_output(); }
  bool thin() const override { return X_->thin(); }
  std::string tag_name(const Cell& c) const override { return X_->tag_name(c); }

 private:
  SPtr X_;
};

SPtr make_op(SPtr X);
SPtr make_co(SPtr X);

// ---- fixtures --------------------------------------------------------------

SPtr fixture_b4();
SPtr fixture_x2();
SPtr fixture_x2m();
SPtr fixture_yn();
SPtr fixture_s1();
SPtr fixture_zg();
SPtr fixture(const std::string& name);  // nullptr if unknown
std::vector<std::string> fixture_names();

}  // namespace pw
