#include "polyweave/bicat.hpp"

#include <algorithm>
#include <functional>

namespace pw {

// ---- finite bicategories ---------------------------------------------------

const std::vector<int>& FiniteBicategory::hom2(int a, int b) const {
  auto key = std::make_pair(a, b);
  auto it = hom2_.find(key);
  if (it != hom2_.end()) return it->second;
  std::vector<int> r;
  for (int f = 0; f < n2(); ++f)
    if (two[f].src == a && two[f].tgt == b) r.push_back(f);
  return hom2_[key] = std::move(r);
}

int FiniteBicategory::inv(int f) const {
  auto it = inv_.find(f);
  if (it != inv_.end()) return it->second;
  int r = -1;
  for (int g : hom2(two[f].tgt, two[f].src))
    if (v(f, g) == vunit[two[f].src] && v(g, f) == vunit[two[f].tgt]) {
      r = g;
      break;
    }
  return inv_[f] = r;
}

void FiniteBicategory::size_tables() {
  vcomp.assign(n2() * n2(), -1);
  hcomp2.assign(n2() * n2(), -1);
  hcomp0.assign(n1() * n1(), -1);
  vunit.assign(n1(), -1);
  hunit.assign(n0(), -1);
  lunit.assign(n1(), -1);
  runit.assign(n1(), -1);
  hom2_.clear();
  inv_.clear();
}

Report check_bicategory_axioms(const FiniteBicategory& B) {
  Report r;
  r.title = "bicategory axioms " + B.label;
  std::map<std::string, size_t> count;
  auto need = [&](bool ok, const std::string& law, Fields f) {
    ++count[law];
    if (!ok) {
      f.insert(f.begin(), {"law", law});
      r.add("axiom-violation", std::move(f));
    }
  };
  auto nm = [&](int f) { return f < 0 ? std::string("undefined") : B.two[f].name; };
  auto n1 = [&](int a) { return a < 0 ? std::string("undefined") : B.one[a].name; };
  int N1 = B.n1(), N2 = B.n2();
  auto s0 = [&](int a) { return B.one[a].src; };
  auto t0 = [&](int a) { return B.one[a].tgt; };

  // tables are total where defined and have the right boundaries
  for (int f = 0; f < N2; ++f)
    for (int g = 0; g < N2; ++g) {
      if (B.two[f].tgt == B.two[g].src) {
        int c = B.v(f, g);
        need(c >= 0 && B.two[c].src == B.two[f].src && B.two[c].tgt == B.two[g].tgt,
             "vertical-boundary", {{"f", nm(f)}, {"g", nm(g)}});
      }
      int a = B.two[f].src, b = B.two[g].src;
      if (t0(a) == s0(b)) {
        int c = B.h2(f, g);
        need(c >= 0 && B.two[c].src == B.h(a, b) &&
                 B.two[c].tgt == B.h(B.two[f].tgt, B.two[g].tgt),
             "horizontal-boundary", {{"f", nm(f)}, {"g", nm(g)}});
      }
    }
  if (!r.ok()) return r;

  // vertical category
  for (int f = 0; f < N2; ++f) {
    need(B.v(B.vunit[B.two[f].src], f) == f && B.v(f, B.vunit[B.two[f].tgt]) == f,
         "vertical-unit", {{"f", nm(f)}});
  }
  for (int f = 0; f < N2; ++f)
    for (int g = 0; g < N2; ++g) {
      if (B.two[f].tgt != B.two[g].src) continue;
      for (int h = 0; h < N2; ++h) {
        if (B.two[g].tgt != B.two[h].src) continue;
        need(B.v(B.v(f, g), h) == B.v(f, B.v(g, h)), "vertical-associativity",
             {{"f", nm(f)}, {"g", nm(g)}, {"h", nm(h)}});
      }
    }

  // horizontal functoriality
  for (int a = 0; a < N1; ++a)
    for (int b = 0; b < N1; ++b) {
      if (t0(a) != s0(b)) continue;
      need(B.h2(B.vunit[a], B.vunit[b]) == B.vunit[B.h(a, b)], "horizontal-unit",
           {{"a", n1(a)}, {"b", n1(b)}});
    }
  for (int f = 0; f < N2; ++f)
    for (int f2 = 0; f2 < N2; ++f2) {
      if (B.two[f].tgt != B.two[f2].src) continue;
      for (int g = 0; g < N2; ++g) {
        if (t0(B.two[f].src) != s0(B.two[g].src)) continue;
        for (int g2 = 0; g2 < N2; ++g2) {
          if (B.two[g].tgt != B.two[g2].src) continue;
          need(B.h2(B.v(f, f2), B.v(g, g2)) == B.v(B.h2(f, g), B.h2(f2, g2)),
               "interchange",
               {{"f", nm(f)}, {"f2", nm(f2)}, {"g", nm(g)}, {"g2", nm(g2)}});
        }
      }
    }

  // structural cells: boundaries, invertibility, naturality
  for (int a = 0; a < N1; ++a)
    for (int b = 0; b < N1; ++b) {
      if (t0(a) != s0(b)) continue;
      for (int c = 0; c < N1; ++c) {
        if (t0(b) != s0(c)) continue;
        auto it = B.assoc.find({a, b, c});
        bool ok = it != B.assoc.end() &&
                  B.two[it->second].src == B.h(B.h(a, b), c) &&
                  B.two[it->second].tgt == B.h(a, B.h(b, c));
        need(ok, "associator-boundary", {{"a", n1(a)}, {"b", n1(b)}, {"c", n1(c)}});
        if (!ok) continue;
        need(B.inv(it->second) >= 0, "associator-invertible",
             {{"a", n1(a)}, {"b", n1(b)}, {"c", n1(c)}});
      }
    }
  for (int a = 0; a < N1; ++a) {
    int ux = B.hunit[s0(a)], uy = B.hunit[t0(a)];
    bool lok = B.lunit[a] >= 0 && B.two[B.lunit[a]].src == B.h(ux, a) &&
               B.two[B.lunit[a]].tgt == a;
    bool rok = B.runit[a] >= 0 && B.two[B.runit[a]].src == B.h(a, uy) &&
               B.two[B.runit[a]].tgt == a;
    need(lok && B.inv(B.lunit[a]) >= 0, "left-unitor", {{"a", n1(a)}});
    need(rok && B.inv(B.runit[a]) >= 0, "right-unitor", {{"a", n1(a)}});
  }
  if (!r.ok()) return r;

  for (int f = 0; f < N2; ++f) {
    int a = B.two[f].src, a2 = B.two[f].tgt;
    int ux = B.hunit[s0(a)], uy = B.hunit[t0(a)];
    need(B.v(B.h2(B.vunit[ux], f), B.lunit[a2]) == B.v(B.lunit[a], f),
         "left-unitor-natural", {{"f", nm(f)}});
    need(B.v(B.h2(f, B.vunit[uy]), B.runit[a2]) == B.v(B.runit[a], f),
         "right-unitor-natural", {{"f", nm(f)}});
    for (int g = 0; g < N2; ++g) {
      int b = B.two[g].src, b2 = B.two[g].tgt;
      if (t0(a) != s0(b)) continue;
      for (int h = 0; h < N2; ++h) {
        int c = B.two[h].src, c2 = B.two[h].tgt;
        if (t0(b) != s0(c)) continue;
        need(B.v(B.h2(B.h2(f, g), h), B.alpha(a2, b2, c2)) ==
                 B.v(B.alpha(a, b, c), B.h2(f, B.h2(g, h))),
             "associator-natural", {{"f", nm(f)}, {"g", nm(g)}, {"h", nm(h)}});
      }
    }
  }

  // pentagon and triangle
  for (int a = 0; a < N1; ++a)
    for (int b = 0; b < N1; ++b) {
      if (t0(a) != s0(b)) continue;
      int u = B.hunit[t0(a)];
      need(B.v(B.alpha(a, u, b), B.h2(B.vunit[a], B.lunit[b])) ==
               B.h2(B.runit[a], B.vunit[b]),
           "triangle", {{"a", n1(a)}, {"b", n1(b)}});
      for (int c = 0; c < N1; ++c) {
        if (t0(b) != s0(c)) continue;
        for (int d = 0; d < N1; ++d) {
          if (t0(c) != s0(d)) continue;
          int lhs = B.v(B.alpha(B.h(a, b), c, d), B.alpha(a, b, B.h(c, d)));
          int rhs = B.v(B.v(B.h2(B.alpha(a, b, c), B.vunit[d]),
                            B.alpha(a, B.h(b, c), d)),
                        B.h2(B.vunit[a], B.alpha(b, c, d)));
          need(lhs == rhs, "pentagon",
               {{"a", n1(a)}, {"b", n1(b)}, {"c", n1(c)}, {"d", n1(d)},
                {"lhs", nm(lhs)}, {"rhs", nm(rhs)}});
        }
      }
    }
  for (const auto& [k, v] : count) r.set(k + "-instances", std::to_string(v));
  return r;
}

FiniteBicategory zg_source() {
  FiniteBicategory B;
  B.label = "Z2-cocycle";
  B.zero = {"*"};
  B.one = {{"0", 0, 0}, {"1", 0, 0}};
  for (int a = 0; a < 2; ++a)
    for (int k = 0; k < 2; ++k)
      B.two.push_back({a, a, (k ? "tw" : "id") + std::to_string(a)});
  B.size_tables();
  auto id = [](int a, int k) { return a * 2 + k; };
  for (int a = 0; a < 2; ++a) {
    B.vunit[a] = id(a, 0);
    B.lunit[a] = id(a, 0);
    B.runit[a] = id(a, 0);
  }
  B.hunit[0] = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) B.hcomp0[a * 2 + b] = a ^ b;
  for (int f = 0; f < 4; ++f)
    for (int g = 0; g < 4; ++g) {
      int a = f / 2, k = f % 2, b = g / 2, l = g % 2;
      if (a == b) B.vcomp[f * 4 + g] = id(a, k ^ l);
      B.hcomp2[f * 4 + g] = id(a ^ b, k ^ l);
    }
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) B.assoc[{a, b, c}] = id(a ^ b ^ c, a & b & c);
  return B;
}

// ---- bracketings -------------------------------------------------------------

Bracketing Bracketing::make_leaf(int a) {
  Bracketing t;
  t.leaf = a;
  return t;
}

Bracketing Bracketing::node(Bracketing l, Bracketing r) {
  Bracketing t;
  t.l = std::make_shared<const Bracketing>(std::move(l));
  t.r = std::make_shared<const Bracketing>(std::move(r));
  return t;
}

Bracketing Bracketing::comb(const Word& w) {
  if (w.empty()) throw Error("empty bracketing");
  Bracketing t = make_leaf(w[0]);
  for (size_t k = 1; k < w.size(); ++k) t = node(t, make_leaf(w[k]));
  return t;
}

Word Bracketing::leaves() const {
  if (leaf >= 0) return {leaf};
  return cat(l->leaves(), r->leaves());
}

std::string Bracketing::str(const FiniteBicategory& B) const {
  if (leaf >= 0) return B.one[leaf].name;
  return "(" + l->str(B) + "," + r->str(B) + ")";
}

Bracketing parse_bracketing(const FiniteBicategory& B, const std::string& s) {
  size_t i = 0;
  std::function<Bracketing()> go = [&]() -> Bracketing {
    if (i < s.size() && s[i] == '(') {
      ++i;
      Bracketing l = go();
      if (i >= s.size() || s[i] != ',') throw Error("expected ',' in " + s);
      ++i;
      Bracketing r = go();
      if (i >= s.size() || s[i] != ')') throw Error("expected ')' in " + s);
      ++i;
      return Bracketing::node(std::move(l), std::move(r));
    }
    size_t j = i;
    while (j < s.size() && s[j] != ',' && s[j] != ')') ++j;
    std::string name = s.substr(i, j - i);
    i = j;
    for (int a = 0; a < B.n1(); ++a)
      if (B.one[a].name == name) return Bracketing::make_leaf(a);
    throw Error("unknown 1-cell '" + name + "'");
  };
  Bracketing t = go();
  if (i != s.size()) throw Error("trailing input in " + s);
  return t;
}

int bracket_cell(const FiniteBicategory& B, const Bracketing& t) {
  if (t.leaf >= 0) return t.leaf;
  return B.h(bracket_cell(B, *t.l), bracket_cell(B, *t.r));
}

namespace {

int comb_cell(const FiniteBicategory& B, const Word& w) {
  int c = w[0];
  for (size_t k = 1; k < w.size(); ++k) c = B.h(c, w[k]);
  return c;
}

// comb(L) * comb(R) -> comb(L ++ R)
int to_comb_cell(const FiniteBicategory& B, const Word& L, const Word& R) {
  if (R.size() == 1) return B.vunit[B.h(comb_cell(B, L), R[0])];
  Word init(R.begin(), R.end() - 1);
  int a = B.alpha(comb_cell(B, L), comb_cell(B, init), R.back());
  return B.v(B.inv(a), B.h2(to_comb_cell(B, L, init), B.vunit[R.back()]));
}

// bracketing -> left comb
int norm(const FiniteBicategory& B, const Bracketing& t) {
  if (t.leaf >= 0) return B.vunit[t.leaf];
  return B.v(B.h2(norm(B, *t.l), norm(B, *t.r)),
             to_comb_cell(B, t.l->leaves(), t.r->leaves()));
}

}  // namespace

int rebracket_coherence(const FiniteBicategory& B, const Bracketing& src,
                        const Bracketing& tgt) {
  if (src.leaves() != tgt.leaves()) throw Error("bracketings differ in leaves");
  return B.v(norm(B, src), B.inv(norm(B, tgt)));
}

// ---- groth -------------------------------------------------------------------

int GrothStructure::comb(const Word& w) const {
  auto it = comb_.find(w);
  if (it != comb_.end()) return it->second;
  return comb_[w] = comb_cell(*B_, w);
}

uint32_t GrothStructure::hom_size(const Word& in, const Word& out) const {
  return (uint32_t)B_->hom2(comb(in), comb(out)).size();
}

int GrothStructure::to_base(const Cell& c) const {
  return B_->hom2(comb(c.in), comb(c.out)).at(c.tag);
}

Cell GrothStructure::from_base(const Word& in, const Word& out, int f) const {
  const auto& h = B_->hom2(comb(in), comb(out));
  auto it = std::find(h.begin(), h.end(), f);
  if (it == h.end()) throw Error("2-cell does not fit the boundary");
  return {in, out, (uint32_t)(it - h.begin())};
}

int GrothStructure::to_comb(const Word& L, const Word& R) const {
  auto key = std::make_pair(L, R);
  auto it = to_comb_.find(key);
  if (it != to_comb_.end()) return it->second;
  return to_comb_[key] = to_comb_cell(*B_, L, R);
}

int GrothStructure::whisker(const Word& Lw, int f, const Word& A,
                            const Word& Bw, const Word& Rw) const {
  const FiniteBicategory& B = *B_;
  auto N = [&](const Word& M) {
    if (Lw.empty() && Rw.empty()) return B.vunit[comb(M)];
    if (Lw.empty()) return to_comb(M, Rw);
    if (Rw.empty()) return to_comb(Lw, M);
    return B.v(B.h2(to_comb(Lw, M), B.vunit[comb(Rw)]), to_comb(cat(Lw, M), Rw));
  };
  int mid = f;
  if (!Lw.empty()) mid = B.h2(B.vunit[comb(Lw)], mid);
  if (!Rw.empty()) mid = B.h2(mid, B.vunit[comb(Rw)]);
  return B.v(B.v(B.inv(N(A)), mid), N(Bw));
}

uint32_t GrothStructure::compose(const Cell& t, int j1, int j2, const Cell& s,
                                 int i1, int i2, const Word& rin,
                                 const Word& rout) const {
  auto key = std::make_tuple(t, j1, j2, s, i1, i2);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  const FiniteBicategory& B = *B_;
  int m = (int)t.out.size(), p = (int)s.in.size();
  int ft = to_base(t), fs = to_base(s);
  int r;
  if (i1 == 1 && i2 == p) {
    r = B.v(ft, whisker(slice(t.out, 1, j1 - 1), fs, s.in, s.out,
                        slice(t.out, j2 + 1, m)));
  } else if (j1 == 1 && j2 == m) {
    r = B.v(whisker(slice(s.in, 1, i1 - 1), ft, t.in, t.out,
                    slice(s.in, i2 + 1, p)),
            fs);
  } else if (i1 == 1 && j2 == m) {
    Word srest = slice(s.in, i2 + 1, p), tpre = slice(t.out, 1, j1 - 1);
    r = B.v(whisker({}, ft, t.in, t.out, srest), whisker(tpre, fs, s.in, s.out, {}));
  } else {
    Word spre = slice(s.in, 1, i1 - 1), tpost = slice(t.out, j2 + 1, m);
    r = B.v(whisker(spre, ft, t.in, t.out, {}), whisker({}, fs, s.in, s.out, tpost));
  }
  uint32_t tag = from_base(rin, rout, r).tag;
  memo_[key] = tag;
  return tag;
}

std::string GrothStructure::tag_name(const Cell& c) const {
  return B_->two[to_base(c)].name;
}

SPtr groth(std::shared_ptr<const FiniteBicategory> B) {
  return std::make_shared<GrothStructure>(std::move(B));
}

// ---- extraction ----------------------------------------------------------------

ExtractChoices default_choices(const Structure& X, const Budget& b) {
  ExtractChoices ch;
  auto w = find_unit_witnesses(X, b);
  if (!w) throw NoSolution(X.label() + " is not tensor 0-representable");
  ch.w = coherentize_witnesses(X, *w, b);
  for (int a = 0; a < X.num1(); ++a)
    for (int c = 0; c < X.num1(); ++c) {
      if (X.tgt(a) != X.src(c)) continue;
      auto rep = search_representing(X, Kind::tensor, a, c, b);
      if (!rep)
        throw NoSolution("no tensor of " + X.name1(a) + " and " + X.name1(c));
      ch.tensor[{a, c}] = rep->cell;
    }
  return ch;
}

Extracted extract_bicategory(const Structure& X, const ExtractChoices& ch,
                             const Budget& b) {
  Extracted ex;
  FiniteBicategory& B = ex.B;
  B.label = "G(" + X.label() + ")";
  for (int x = 0; x < X.num0(); ++x) B.zero.push_back(X.name0(x));
  for (int a = 0; a < X.num1(); ++a) B.one.push_back({X.name1(a), X.src(a), X.tgt(a)});
  for (int a = 0; a < X.num1(); ++a)
    for (int c = 0; c < X.num1(); ++c) {
      if (X.src(a) != X.src(c) || X.tgt(a) != X.tgt(c)) continue;
      for (const Cell& p : hom(X, {a}, {c})) {
        ex.index[p] = (int)ex.cells.size();
        ex.cells.push_back(p);
        B.two.push_back({a, c, show(X, p)});
      }
    }
  B.size_tables();
  auto id = [&](const Cell& p) {
    auto it = ex.index.find(p);
    if (it == ex.index.end()) throw Error("cell outside the extracted set: " + show(X, p));
    return it->second;
  };
  auto T = [&](int a, int c) -> const Cell& { return ch.tensor.at({a, c}); };
  for (int a = 0; a < X.num1(); ++a) {
    auto u = find_unit2(X, a, b);
    if (!u) throw NoSolution("no unit on " + X.name1(a));
    B.vunit[a] = id(*u);
  }
  for (auto [x, u] : ch.w.unit1) B.hunit[x] = u;
  for (const auto& [k, t] : ch.tensor) B.hcomp0[k.first * B.n1() + k.second] = t.out[0];
  int N2 = B.n2();
  for (int f = 0; f < N2; ++f)
    for (int g = 0; g < N2; ++g) {
      const Cell &cf = ex.cells[f], &cg = ex.cells[g];
      if (cf.out == cg.in) B.vcomp[f * N2 + g] = id(cut(X, cf, 1, cg, 1));
      if (X.tgt(cf.in[0]) != X.src(cg.in[0])) continue;
      Cell s = cut(X, cf, 1, cut(X, cg, 1, T(cf.out[0], cg.out[0]), 2), 1);
      B.hcomp2[f * N2 + g] =
          id(divide(X, T(cf.in[0], cg.in[0]), Side::output, 1, s, 1));
    }
  for (int a = 0; a < X.num1(); ++a)
    for (int c = 0; c < X.num1(); ++c) {
      if (X.tgt(a) != X.src(c)) continue;
      for (int d = 0; d < X.num1(); ++d) {
        if (X.tgt(c) != X.src(d)) continue;
        int ac = B.h(a, c), cd = B.h(c, d);
        Cell t3 = cut(X, T(a, c), 1, T(ac, d), 1);
        Cell s = cut(X, T(c, d), 1, T(a, cd), 2);
        B.assoc[{a, c, d}] = id(divide(X, t3, Side::output, 1, s, 1));
      }
    }
  for (int a = 0; a < X.num1(); ++a) {
    int ux = B.hunit[X.src(a)], uy = B.hunit[X.tgt(a)];
    B.lunit[a] = id(divide(X, T(ux, a), Side::output, 1, ch.w.left.at(a), 1));
    B.runit[a] = id(divide(X, T(a, uy), Side::output, 1, ch.w.right.at(a), 1));
  }
  return ex;
}

Report check_functor_axioms(const FunctorData& F, const FiniteBicategory& B,
                            const FiniteBicategory& C) {
  Report r;
  r.title = "functor axioms";
  std::map<std::string, size_t> count;
  auto need = [&](bool ok, const std::string& law, Fields f) {
    ++count[law];
    if (!ok) {
      f.insert(f.begin(), {"law", law});
      r.add("axiom-violation", std::move(f));
    }
  };
  auto nm = [&](int f) { return B.two[f].name; };
  auto n1 = [&](int a) { return B.one[a].name; };
  for (int a = 0; a < B.n1(); ++a) {
    int fa = F.map1[a];
    need(C.one[fa].src == F.map0[B.one[a].src] && C.one[fa].tgt == F.map0[B.one[a].tgt],
         "1-cell-boundary", {{"a", n1(a)}});
  }
  for (int f = 0; f < B.n2(); ++f) {
    int ff = F.map2[f];
    need(C.two[ff].src == F.map1[B.two[f].src] && C.two[ff].tgt == F.map1[B.two[f].tgt],
         "2-cell-boundary", {{"f", nm(f)}});
  }
  if (!r.ok()) return r;
  for (int a = 0; a < B.n1(); ++a)
    need(F.map2[B.vunit[a]] == C.vunit[F.map1[a]], "vertical-unit", {{"a", n1(a)}});
  for (int f = 0; f < B.n2(); ++f)
    for (int g = 0; g < B.n2(); ++g)
      if (B.two[f].tgt == B.two[g].src)
        need(F.map2[B.v(f, g)] == C.v(F.map2[f], F.map2[g]), "vertical",
             {{"f", nm(f)}, {"g", nm(g)}});
  auto comp = [&](int a, int b) { return F.comp.at({a, b}); };
  for (int f = 0; f < B.n2(); ++f)
    for (int g = 0; g < B.n2(); ++g) {
      int a = B.two[f].src, c = B.two[f].tgt, b = B.two[g].src, d = B.two[g].tgt;
      if (B.one[a].tgt != B.one[b].src) continue;
      need(C.v(C.h2(F.map2[f], F.map2[g]), comp(c, d)) ==
               C.v(comp(a, b), F.map2[B.h2(f, g)]),
           "composite-natural", {{"f", nm(f)}, {"g", nm(g)}});
    }
  for (int a = 0; a < B.n1(); ++a)
    for (int b = 0; b < B.n1(); ++b) {
      if (B.one[a].tgt != B.one[b].src) continue;
      for (int c = 0; c < B.n1(); ++c) {
        if (B.one[b].tgt != B.one[c].src) continue;
        int fa = F.map1[a], fb = F.map1[b], fc = F.map1[c];
        int lhs = C.v(C.v(C.h2(comp(a, b), C.vunit[fc]), comp(B.h(a, b), c)),
                      F.map2[B.alpha(a, b, c)]);
        int rhs = C.v(C.v(C.alpha(fa, fb, fc), C.h2(C.vunit[fa], comp(b, c))),
                      comp(a, B.h(b, c)));
        need(lhs == rhs, "associativity", {{"a", n1(a)}, {"b", n1(b)}, {"c", n1(c)}});
      }
    }
  for (int a = 0; a < B.n1(); ++a) {
    int x = B.one[a].src, y = B.one[a].tgt, fa = F.map1[a];
    int lhs = C.v(C.v(C.h2(F.unitc[x], C.vunit[fa]), comp(B.hunit[x], a)),
                  F.map2[B.lunit[a]]);
    need(lhs == C.lunit[fa], "left-unit", {{"a", n1(a)}});
    int rhs = C.v(C.v(C.h2(C.vunit[fa], F.unitc[y]), comp(a, B.hunit[y])),
                  F.map2[B.runit[a]]);
    need(rhs == C.runit[fa], "right-unit", {{"a", n1(a)}});
  }
  for (const auto& [k, v] : count) r.set(k + "-instances", std::to_string(v));
  return r;
}

FunctorData extract_functor(const Morphism& f, const Structure& X,
                            const Structure& Y, const ExtractChoices& cx,
                            const ExtractChoices& cy, const Extracted& ex,
                            const Extracted& ey, const Budget& b) {
  FunctorData F;
  auto id = [&](const Cell& p) {
    auto it = ey.index.find(p);
    if (it == ey.index.end()) throw Error("cell outside the extracted set: " + show(Y, p));
    return it->second;
  };
  for (int x = 0; x < X.num0(); ++x) F.map0.push_back(f.map0(x));
  for (int a = 0; a < X.num1(); ++a) F.map1.push_back(f.map1(a));
  for (const Cell& c : ex.cells) F.map2.push_back(id(f.map2(c)));
  for (const auto& [k, t] : cx.tensor) {
    Cell ft = f.map2(t);
    const Cell& ty = cy.tensor.at({f.map1(k.first), f.map1(k.second)});
    F.comp[k] = id(divide(Y, ty, Side::output, 1, ft, 1));
  }
  for (int x = 0; x < X.num0(); ++x) {
    int u = cx.w.unit1.at(x);
    Cell fl = f.map2(cx.w.left.at(u));
    const Cell& r = cy.w.right.at(f.map1(u));
    Cell bar = divide(Y, r, Side::input, 2, fl, 1);
    F.unitc.push_back(id(inverse2(Y, bar, b)));
  }
  return F;
}

LinearBicatData extract_linear(const SPtr& X, const ExtractChoices& tensor,
                               const ExtractChoices& par, const Budget& b) {
  LinearBicatData L;
  SPtr co = make_co(X);
  L.tensor = extract_bicategory(*X, tensor, b);
  L.par = extract_bicategory(*co, par, b);
  auto T = [&](int a, int c) -> const Cell& { return tensor.tensor.at({a, c}); };
  auto P = [&](int a, int c) { return CoView::to_base(par.tensor.at({a, c})); };
  const Structure& S = *X;
  for (int a = 0; a < S.num1(); ++a)
    for (int c = 0; c < S.num1(); ++c) {
      if (S.tgt(a) != S.src(c)) continue;
      for (int d = 0; d < S.num1(); ++d) {
        if (S.tgt(c) != S.src(d)) continue;
        int cpd = P(c, d).in[0], ac = T(a, c).out[0];
        Cell D = cut(S, P(c, d), 1, T(a, c), 2);
        Cell y = divide(S, T(a, cpd), Side::output, 1, D, 1);
        L.delta_l[{a, c, d}] = divide(S, P(ac, d), Side::input, 1, y, 1);
        int apc = P(a, c).in[0], cd = T(c, d).out[0];
        Cell D2 = cut(S, P(a, c), 2, T(c, d), 1);
        Cell y2 = divide(S, T(apc, d), Side::output, 1, D2, 1);
        L.delta_r[{a, c, d}] = divide(S, P(a, cd), Side::input, 1, y2, 1);
      }
    }
  return L;
}

Report check_linear_shapes(const Structure& X, const LinearBicatData& L) {
  Report r;
  r.title = "distributor shapes";
  const FiniteBicategory &BT = L.tensor.B, &BP = L.par.B;
  for (const auto& [k, c] : L.delta_l) {
    auto [a, b, d] = k;
    bool ok = c.in == Word{BT.h(a, BP.h(b, d))} && c.out == Word{BP.h(BT.h(a, b), d)};
    if (!ok) r.add("shape", {{"cell", "delta_l"}, {"at", X.name1(a) + "," + X.name1(b) + "," + X.name1(d)}});
  }
  for (const auto& [k, c] : L.delta_r) {
    auto [a, b, d] = k;
    bool ok = c.in == Word{BT.h(BP.h(a, b), d)} && c.out == Word{BP.h(a, BT.h(b, d))};
    if (!ok) r.add("shape", {{"cell", "delta_r"}, {"at", X.name1(a) + "," + X.name1(b) + "," + X.name1(d)}});
  }
  r.set("delta-instances", std::to_string(L.delta_l.size() + L.delta_r.size()));
  return r;
}

// ---- round trip --------------------------------------------------------------

namespace {

struct CombMaps {
  const Structure& X;
  const ExtractChoices& ch;
  Budget b;
  mutable std::map<Word, Cell> to_, from_;

  // (G) -> (comb G)
  const Cell& to(const Word& w) const {
    auto it = to_.find(w);
    if (it != to_.end()) return it->second;
    Cell c;
    if (w.size() == 1) {
      auto u = find_unit2(X, w[0], b);
      if (!u) throw NoSolution("no unit on " + X.name1(w[0]));
      c = *u;
    } else {
      Word init(w.begin(), w.end() - 1);
      const Cell& ti = to(init);
      c = cut(X, ti, 1, ch.tensor.at({ti.out[0], w.back()}), 1);
    }
    return to_[w] = c;
  }
  const Cell& from(const Word& w) const {
    auto it = from_.find(w);
    if (it != from_.end()) return it->second;
    return from_[w] = invert2(X, to(w), b);
  }
};

class ToGroth : public Morphism {
 public:
  ToGroth(std::shared_ptr<const CombMaps> cm, std::shared_ptr<const Extracted> ex,
          std::shared_ptr<const GrothStructure> Y)
      : cm_(std::move(cm)), ex_(std::move(ex)), Y_(std::move(Y)) {}
  std::string label() const override { return "h(" + cm_->X.label() + ")"; }
  int map0(int x) const override { return x; }
  int map1(int a) const override { return a; }
  Cell map2(const Cell& q) const override {
    const Structure& X = cm_->X;
    int m = (int)q.out.size();
    Cell s = merge(X, q, 1, m, cm_->to(q.out), 1, m);
    Cell x = divide(X, cm_->to(q.in), Side::output, 1, s, 1);
    return Y_->from_base(q.in, q.out, ex_->index.at(x));
  }

 private:
  std::shared_ptr<const CombMaps> cm_;
  std::shared_ptr<const Extracted> ex_;
  std::shared_ptr<const GrothStructure> Y_;
};

class FromGroth : public Morphism {
 public:
  FromGroth(std::shared_ptr<const CombMaps> cm, std::shared_ptr<const Extracted> ex,
            std::shared_ptr<const GrothStructure> Y)
      : cm_(std::move(cm)), ex_(std::move(ex)), Y_(std::move(Y)) {}
  std::string label() const override { return "h'(" + cm_->X.label() + ")"; }
  int map0(int x) const override { return x; }
  int map1(int a) const override { return a; }
  Cell map2(const Cell& y) const override {
    const Structure& X = cm_->X;
    const Cell& f = ex_->cells.at(Y_->to_base(y));
    Cell l = merge(X, cm_->to(y.in), 1, 1, f, 1, 1);
    return merge(X, l, 1, 1, cm_->from(y.out), 1, 1);
  }

 private:
  std::shared_ptr<const CombMaps> cm_;
  std::shared_ptr<const Extracted> ex_;
  std::shared_ptr<const GrothStructure> Y_;
};

}  // namespace

RoundTrip groth_extract_equivalence(const SPtr& X, const ExtractChoices& ch,
                                    const Extracted& ex, const Budget& b) {
  auto B = std::make_shared<const FiniteBicategory>(ex.B);
  auto Y = std::make_shared<const GrothStructure>(B);
  auto cm = std::make_shared<const CombMaps>(CombMaps{*X, ch, b, {}, {}});
  auto exs = std::make_shared<const Extracted>(ex);
  RoundTrip rt;
  rt.Y = Y;
  rt.E.f = std::make_shared<ToGroth>(cm, exs, Y);
  rt.E.g = std::make_shared<FromGroth>(cm, exs, Y);
  auto wy = find_unit_witnesses(*Y, b);
  if (!wy) throw NoSolution("no unit witnesses on " + Y->label());
  UnitWitnesses cy = coherentize_witnesses(*Y, *wy, b);
  rt.E.eta = identity_transfor(*X, *X, identity_morphism(*X), ch.w, b);
  rt.E.eps = identity_transfor(*Y, *Y, identity_morphism(*Y), cy, b);
  return rt;
}

// ---- transformations of functors ------------------------------------------------

Report check_oplax_coherence(const OplaxData& S, const FunctorData& F,
                             const FunctorData& G, const FiniteBicategory& B,
                             const FiniteBicategory& C) {
  Report r;
  r.title = "oplax coherence";
  size_t ncomp = 0, nunit = 0;
  auto n1 = [&](int a) { return B.one[a].name; };
  auto one = [&](int c) { return C.vunit[c]; };
  for (int a = 0; a < B.n1(); ++a) {
    int x = B.one[a].src, y = B.one[a].tgt;
    int fa = F.map1[a], ga = G.map1[a];
    int sx = S.comp0[x], sy = S.comp0[y];
    bool shape = C.two[S.comp1[a]].src == C.h(fa, sy) &&
                 C.two[S.comp1[a]].tgt == C.h(sx, ga);
    if (!shape) r.add("shape", {{"a", n1(a)}});
  }
  if (!r.ok()) return r;
  for (int a = 0; a < B.n1(); ++a)
    for (int b = 0; b < B.n1(); ++b) {
      if (B.one[a].tgt != B.one[b].src) continue;
      int x = B.one[a].src, y = B.one[a].tgt, z = B.one[b].tgt;
      int fa = F.map1[a], fb = F.map1[b], ga = G.map1[a], gb = G.map1[b];
      int sx = S.comp0[x], sy = S.comp0[y], sz = S.comp0[z];
      int top = C.v(C.v(C.inv(C.alpha(fa, fb, sz)),
                        C.h2(F.comp.at({a, b}), one(sz))),
                    S.comp1[B.h(a, b)]);
      int bottom = C.v(C.h2(one(fa), S.comp1[b]), C.inv(C.alpha(fa, sy, gb)));
      bottom = C.v(bottom, C.h2(S.comp1[a], one(gb)));
      bottom = C.v(bottom, C.alpha(sx, ga, gb));
      bottom = C.v(bottom, C.h2(one(sx), G.comp.at({a, b})));
      ++ncomp;
      if (top != bottom)
        r.add("oplax-coherence", {{"law", "composition"}, {"a", n1(a)},
                                  {"b", n1(b)}, {"lhs", C.two[top].name},
                                  {"rhs", C.two[bottom].name}});
    }
  for (int x = 0; x < B.n0(); ++x) {
    int sx = S.comp0[x], u = B.hunit[x];
    int lhs = C.v(C.h2(F.unitc[x], one(sx)), S.comp1[u]);
    int rhs = C.v(C.v(C.lunit[sx], C.inv(C.runit[sx])), C.h2(one(sx), G.unitc[x]));
    ++nunit;
    if (lhs != rhs)
      r.add("oplax-coherence", {{"law", "unit"}, {"x", B.zero[x]},
                                {"lhs", C.two[lhs].name},
                                {"rhs", C.two[rhs].name}});
  }
  r.set("composition-instances", std::to_string(ncomp));
  r.set("unit-instances", std::to_string(nunit));
  return r;
}

OplaxData transfer_oplax(const Transfor& T, const Structure& X,
                         const Structure& Y, const ExtractChoices& cy,
                         const Extracted& ey, const Budget&) {
  OplaxData S;
  S.comp0 = T.comp0;
  for (int a = 0; a < X.num1(); ++a) {
    int fa = T.src->map1(a), ga = T.tgt->map1(a);
    int sx = T.comp0[X.src(a)], sy = T.comp0[X.tgt(a)];
    const Cell& t1 = cy.tensor.at({fa, sy});
    const Cell& t2 = cy.tensor.at({sx, ga});
    Cell s = merge(Y, T.comp1.at(a), 1, 2, t2, 1, 2);
    Cell th = divide(Y, t1, Side::output, 1, s, 1);
    S.comp1.push_back(ey.index.at(th));
  }
  return S;
}

Transfor transfer_oplax_back(const OplaxData& S, MPtr f, MPtr g,
                             const Structure& X, const Structure& Y,
                             const ExtractChoices& cy, const Extracted& ey,
                             const Budget& b) {
  Transfor T;
  T.label = "transfer(" + f->label() + "," + g->label() + ")";
  T.comp0 = S.comp0;
  for (int a = 0; a < X.num1(); ++a) {
    int fa = f->map1(a), ga = g->map1(a);
    int sx = S.comp0[X.src(a)], sy = S.comp0[X.tgt(a)];
    const Cell& t1 = cy.tensor.at({fa, sy});
    const Cell& t2 = cy.tensor.at({sx, ga});
    Cell l = merge(Y, t1, 1, 1, ey.cells.at(S.comp1[a]), 1, 1);
    T.comp1[a] = merge(Y, l, 1, 1, invert2(Y, t2, b), 1, 1);
  }
  T.src = std::move(f);
  T.tgt = std::move(g);
  return T;
}

}  // namespace pw
