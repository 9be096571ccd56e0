#include "polyweave/structures.hpp"

#include <algorithm>

namespace pw {

int Globe::find1(const std::string& name) const {
  for (size_t k = 0; k < one_.size(); ++k)
    if (one_[k].name == name) return (int)k;
  return -1;
}

int Globe::find0(const std::string& name) const {
  for (size_t k = 0; k < zero_.size(); ++k)
    if (zero_[k] == name) return (int)k;
  return -1;
}

uint32_t ThinStructure::hom_size(const Word& in, const Word& out) const {
  if (single_ && out.size() != 1) return 0;
  if (!parallel(*this, in, out)) return 0;
  return pred_(in, out) ? 1 : 0;
}

// ---- tabular ---------------------------------------------------------------

uint32_t TabularStructure::add_cell(const Word& in, const Word& out,
                                    std::string name) {
  auto& v = cells_[{in, out}];
  v.push_back(std::move(name));
  return (uint32_t)v.size() - 1;
}

int TabularStructure::find_cell(const Word& in, const Word& out,
                                const std::string& name) const {
  auto it = cells_.find({in, out});
  if (it == cells_.end()) return -1;
  for (size_t k = 0; k < it->second.size(); ++k)
    if (it->second[k] == name) return (int)k;
  return -1;
}

uint32_t TabularStructure::hom_size(const Word& in, const Word& out) const {
  if (!within(table_budget_, *this, in, out))
    throw BudgetExceeded("boundary outside the table: " + show_word(*this, in) +
                         "->" + show_word(*this, out));
  auto it = cells_.find({in, out});
  return it == cells_.end() ? 0 : (uint32_t)it->second.size();
}

uint32_t TabularStructure::compose(const Cell& t, int j1, int j2, const Cell& s,
                                   int i1, int i2, const Word& rin,
                                   const Word& rout) const {
  if (!within(table_budget_, *this, rin, rout))
    throw BudgetExceeded("composite outside the table");
  auto it = table_.find({t, j1, j2, s, i1, i2});
  if (it == table_.end())
    throw IncompleteTable("no table entry for " + show(*this, t) + " [" +
                          std::to_string(j1) + "," + std::to_string(j2) +
                          "] " + show(*this, s) + " [" + std::to_string(i1) +
                          "," + std::to_string(i2) + "]");
  return it->second;
}

std::string TabularStructure::tag_name(const Cell& c) const {
  auto it = cells_.find({c.in, c.out});
  if (it == cells_.end() || c.tag >= it->second.size()) return "?";
  return it->second[c.tag];
}

std::shared_ptr<TabularStructure> tabulate(const Structure& X, const Budget& b) {
  std::vector<std::string> zero;
  for (int x = 0; x < X.num0(); ++x) zero.push_back(X.name0(x));
  std::vector<OneCell> one;
  for (int a = 0; a < X.num1(); ++a)
    one.push_back({X.name1(a), X.src(a), X.tgt(a)});
  auto T = std::make_shared<TabularStructure>(X.label(), zero, one, b,
                                              X.has_merges(), X.single_output());
  auto cells = cells_within(X, b);
  for (const Cell& c : cells) {
    std::string n = X.tag_name(c);
    T->add_cell(c.in, c.out, n.empty() ? "c" : n);
  }
  // index cells by input word for the gluing search
  for (const Cell& t : cells) {
    for (const Cell& s : cells) {
      int m = (int)t.out.size(), p = (int)s.in.size();
      for (int j1 = 1; j1 <= m; ++j1)
        for (int j2 = j1; j2 <= m; ++j2) {
          if (!X.has_merges() && j2 != j1) break;
          int len = j2 - j1 + 1;
          for (int i1 = 1; i1 + len - 1 <= p; ++i1) {
            int i2 = i1 + len - 1;
            if (!legal_sides(j1, j2, m, i1, i2, p)) continue;
            if (!std::equal(t.out.begin() + j1 - 1, t.out.begin() + j2,
                            s.in.begin() + i1 - 1))
              continue;
            Word rin, rout;
            merge_boundary(t, j1, j2, s, i1, i2, rin, rout);
            if (!within(b, X, rin, rout)) continue;
            Cell r = merge(X, t, j1, j2, s, i1, i2);
            T->set_entry({t, j1, j2, s, i1, i2}, r.tag);
          }
        }
    }
  }
  return T;
}

// ---- dual views --------------------------------------------------------------

namespace {
Word rev(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}
}  // namespace

Cell OpView::to_base(const Cell& c) { return {rev(c.in), rev(c.out), c.tag}; }

uint32_t OpView::hom_size(const Word& in, const Word& out) const {
  return X_->hom_size(rev(in), rev(out));
}

uint32_t OpView::compose(const Cell& t, int j1, int j2, const Cell& s, int i1,
                         int i2, const Word& rin, const Word& rout) const {
  int m = (int)t.out.size(), p = (int)s.in.size();
  return X_->compose(to_base(t), m + 1 - j2, m + 1 - j1, to_base(s),
                     p + 1 - i2, p + 1 - i1, rev(rin), rev(rout));
}

std::string OpView::tag_name(const Cell& c) const {
  return X_->tag_name(to_base(c));
}

uint32_t CoView::compose(const Cell& t, int j1, int j2, const Cell& s, int i1,
                         int i2, const Word& rin, const Word& rout) const {
  return X_->compose(to_base(s), i1, i2, to_base(t), j1, j2, rout, rin);
}

std::string CoView::tag_name(const Cell& c) const {
  return X_->tag_name(to_base(c));
}

SPtr make_op(SPtr X) { return std::make_shared<OpView>(std::move(X)); }
SPtr make_co(SPtr X) { return std::make_shared<CoView>(std::move(X)); }

}  // namespace pw
