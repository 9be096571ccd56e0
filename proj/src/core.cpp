#include "polyweave/core.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pw {

std::string Budget::str() const {
  return std::to_string(max_in) + "," + std::to_string(max_out) + "," +
         std::to_string(max_seq);
}

std::string Structure::tag_name(const Cell& c) const {
  if (thin()) return "";
  return std::to_string(c.tag);
}

const std::vector<int>& Structure::out_edges(int x) const {
  if (out_edges_.empty()) {
    out_edges_.assign(num0(), {});
    for (int a = 0; a < num1(); ++a) out_edges_[src(a)].push_back(a);
  }
  return out_edges_[x];
}

int Structure::weight(const Word& w) const {
  int s = 0;
  for (int a : w) s += weight1(a);
  return s;
}

// words of length 1..maxlen and weight <= maxw from x to y; x or y may be -1
const std::vector<Word>& Structure::words(int x, int y, int maxlen,
                                          int maxw) const {
  auto key = std::make_tuple(x, y, maxlen, maxw);
  auto it = words_.find(key);
  if (it != words_.end()) return it->second;
  std::vector<Word> res;
  Word cur;
  std::function<void(int, int)> go = [&](int at, int w) {
    if (!cur.empty() && (y < 0 || tgt(cur.back()) == y)) res.push_back(cur);
    if ((int)cur.size() == maxlen) return;
    auto step = [&](int a) {
      int nw = w + weight1(a);
      if (nw > maxw) return;
      cur.push_back(a);
      go(tgt(a), nw);
      cur.pop_back();
    };
    if (at < 0) {
      for (int a = 0; a < num1(); ++a) step(a);
    } else {
      for (int a : out_edges(at)) step(a);
    }
  };
  go(x, 0);
  std::sort(res.begin(), res.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return words_[key] = std::move(res);
}

Word slice(const Word& w, int from, int to) {
  if (to < from) return {};
  return Word(w.begin() + (from - 1), w.begin() + to);
}

Word cat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Word cat(const Word& a, const Word& b, const Word& c) {
  return cat(cat(a, b), c);
}

int word_src(const Structure& X, const Word& w) { return X.src(w.front()); }
int word_tgt(const Structure& X, const Word& w) { return X.tgt(w.back()); }

bool composable(const Structure& X, const Word& w) {
  if (w.empty()) return false;
  for (size_t k = 1; k < w.size(); ++k)
    if (X.tgt(w[k - 1]) != X.src(w[k])) return false;
  return true;
}

bool parallel(const Structure& X, const Word& a, const Word& b) {
  return composable(X, a) && composable(X, b) &&
         word_src(X, a) == word_src(X, b) && word_tgt(X, a) == word_tgt(X, b);
}

bool legal_sides(int j1, int j2, int m, int i1, int i2, int p) {
  return (i1 == 1 && i2 == p) || (i1 == 1 && j2 == m) ||
         (j1 == 1 && j2 == m) || (j1 == 1 && i2 == p);
}

void merge_boundary(const Cell& t, int j1, int j2, const Cell& s, int i1,
                    int i2, Word& rin, Word& rout) {
  int m = (int)t.out.size(), p = (int)s.in.size();
  rin = cat(slice(s.in, 1, i1 - 1), t.in, slice(s.in, i2 + 1, p));
  rout = cat(slice(t.out, 1, j1 - 1), s.out, slice(t.out, j2 + 1, m));
}

Cell merge(const Structure& X, const Cell& t, int j1, int j2, const Cell& s,
           int i1, int i2) {
  int m = (int)t.out.size(), p = (int)s.in.size();
  if (j1 < 1 || j2 > m || j1 > j2 || i1 < 1 || i2 > p || i1 > i2 ||
      j2 - j1 != i2 - i1)
    throw IllegalMerge("interval out of range");
  if (!X.has_merges() && (j1 != j2))
    throw IllegalMerge("structure has cuts only");
  if (!legal_sides(j1, j2, m, i1, i2, p))
    throw IllegalMerge("indices violate the side conditions");
  for (int k = 0; k <= j2 - j1; ++k)
    if (t.out[j1 - 1 + k] != s.in[i1 - 1 + k])
      throw IllegalMerge("boundaries do not match");
  Cell r;
  merge_boundary(t, j1, j2, s, i1, i2, r.in, r.out);
  r.tag = X.compose(t, j1, j2, s, i1, i2, r.in, r.out);
  return r;
}

Cell cut(const Structure& X, const Cell& t, int j, const Cell& s, int i) {
  return merge(X, t, j, j, s, i, i);
}

bool valid_cell(const Structure& X, const Cell& c) {
  if (!parallel(X, c.in, c.out)) return false;
  return c.tag < X.hom_size(c.in, c.out);
}

std::string show_word(const Structure& X, const Word& w) {
  std::string s = "(";
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) s += ",";
    s += X.name1(w[k]);
  }
  return s + ")";
}

std::string show(const Structure& X, const Cell& c) {
  std::string s = show_word(X, c.in) + "->" + show_word(X, c.out);
  std::string t = X.tag_name(c);
  if (!t.empty()) s += "#" + t;
  return s;
}

bool within(const Budget& b, const Structure& X, const Word& in,
            const Word& out) {
  return (int)in.size() <= b.max_in && (int)out.size() <= b.max_out &&
         X.weight(in) <= b.max_seq && X.weight(out) <= b.max_seq;
}

bool within(const Budget& b, const Structure& X, const Cell& c) {
  return within(b, X, c.in, c.out);
}

std::vector<Cell> hom(const Structure& X, const Word& in, const Word& out) {
  std::vector<Cell> r;
  if (!parallel(X, in, out)) return r;
  uint32_t n = X.hom_size(in, out);
  for (uint32_t k = 0; k < n; ++k) r.push_back({in, out, k});
  return r;
}

std::vector<Cell> cells_within(const Structure& X, const Budget& b) {
  std::vector<Cell> r;
  int outmax = X.single_output() ? 1 : b.max_out;
  for (const Word& in : X.words(-1, -1, b.max_in, b.max_seq)) {
    const auto& outs =
        X.words(word_src(X, in), word_tgt(X, in), outmax, b.max_seq);
    for (const Word& out : outs) {
      uint32_t n = X.hom_size(in, out);
      for (uint32_t k = 0; k < n; ++k) r.push_back({in, out, k});
    }
  }
  return r;
}

// ---- diagram evaluation ----------------------------------------------------

namespace {

struct Blob {
  Cell cell;
  std::vector<int> in_lab, out_lab;
};

int label(int cell, int side, int pos) { return cell * 4096 + side * 2048 + pos; }

struct EvalState {
  std::vector<Blob> blobs;
  std::vector<Diagram::Glue> glue;
};

void eval_rec(const Structure& X, const EvalState& st, std::set<Cell>& out,
              size_t limit) {
  if (limit && out.size() >= limit) return;
  if (st.blobs.size() == 1) {
    out.insert(st.blobs[0].cell);
    return;
  }
  for (size_t a = 0; a < st.blobs.size(); ++a) {
    for (size_t b = 0; b < st.blobs.size(); ++b) {
      if (a == b) continue;
      const Blob& A = st.blobs[a];
      const Blob& B = st.blobs[b];
      // glue entries from A.out to B.in
      std::vector<std::pair<int, int>> shared;  // (pos in A.out, pos in B.in)
      std::vector<size_t> used;
      for (size_t g = 0; g < st.glue.size(); ++g) {
        int tl = label(st.glue[g].top, 1, st.glue[g].top_pos);
        int bl = label(st.glue[g].bot, 0, st.glue[g].bot_pos);
        auto ia = std::find(A.out_lab.begin(), A.out_lab.end(), tl);
        auto ib = std::find(B.in_lab.begin(), B.in_lab.end(), bl);
        if (ia != A.out_lab.end() && ib != B.in_lab.end()) {
          shared.push_back({int(ia - A.out_lab.begin()) + 1,
                            int(ib - B.in_lab.begin()) + 1});
          used.push_back(g);
        }
      }
      if (shared.empty()) continue;
      std::sort(shared.begin(), shared.end());
      bool contiguous = true;
      for (size_t k = 1; k < shared.size(); ++k)
        if (shared[k].first != shared[k - 1].first + 1 ||
            shared[k].second != shared[k - 1].second + 1)
          contiguous = false;
      if (!contiguous) continue;
      int j1 = shared.front().first, j2 = shared.back().first;
      int i1 = shared.front().second, i2 = shared.back().second;
      if (!X.has_merges() && j1 != j2) continue;
      if (!legal_sides(j1, j2, (int)A.cell.out.size(), i1, i2,
                       (int)B.cell.in.size()))
        continue;
      Blob R;
      try {
        R.cell = merge(X, A.cell, j1, j2, B.cell, i1, i2);
      } catch (const BudgetExceeded&) {
        continue;
      }
      Cell la{}, lb{};
      la.in = Word(A.in_lab.begin(), A.in_lab.end());
      la.out = Word(A.out_lab.begin(), A.out_lab.end());
      lb.in = Word(B.in_lab.begin(), B.in_lab.end());
      lb.out = Word(B.out_lab.begin(), B.out_lab.end());
      Word rin, rout;
      merge_boundary(la, j1, j2, lb, i1, i2, rin, rout);
      R.in_lab.assign(rin.begin(), rin.end());
      R.out_lab.assign(rout.begin(), rout.end());
      EvalState next;
      for (size_t k = 0; k < st.blobs.size(); ++k)
        if (k != a && k != b) next.blobs.push_back(st.blobs[k]);
      next.blobs.push_back(std::move(R));
      for (size_t g = 0; g < st.glue.size(); ++g)
        if (std::find(used.begin(), used.end(), g) == used.end())
          next.glue.push_back(st.glue[g]);
      eval_rec(X, next, out, limit);
      if (limit && out.size() >= limit) return;
    }
  }
}

EvalState initial(const Diagram& d) {
  EvalState st;
  for (size_t k = 0; k < d.cells.size(); ++k) {
    Blob b;
    b.cell = d.cells[k];
    for (size_t p = 0; p < b.cell.in.size(); ++p)
      b.in_lab.push_back(label((int)k, 0, (int)p + 1));
    for (size_t p = 0; p < b.cell.out.size(); ++p)
      b.out_lab.push_back(label((int)k, 1, (int)p + 1));
    st.blobs.push_back(std::move(b));
  }
  st.glue = d.glue;
  return st;
}

}  // namespace

std::vector<Cell> evaluate_all(const Structure& X, const Diagram& d,
                               size_t limit) {
  std::set<Cell> out;
  eval_rec(X, initial(d), out, limit);
  return {out.begin(), out.end()};
}

Cell evaluate(const Structure& X, const Diagram& d) {
  auto r = evaluate_all(X, d, 1);
  if (r.empty()) throw IllegalMerge("diagram admits no legal evaluation");
  return r.front();
}

}  // namespace pw
