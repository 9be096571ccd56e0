#include "polyweave/mergebicat.hpp"

#include <algorithm>
#include <functional>

namespace pw {

namespace {

// non-owning handle for APIs that take shared structures
SPtr borrow(const Structure& X) { return SPtr(&X, [](const Structure*) {}); }

std::string join_words(const Structure& X, const Word& w) {
  return show_word(X, w);
}

}  // namespace

Report check_merge_axioms(const Structure& X, const Budget& b) {
  return check_scheme_instances(X, b, "merge axioms " + X.label());
}

Certificate is_seq_unit(const Structure& X, const Cell& p, const Budget& b) {
  Certificate c;
  c.property = "sequence-unit";
  c.subject = show(X, p);
  c.budget = b;
  int n = (int)p.in.size();
  if (p.in != p.out) {
    c.fail("not of shape (G)->(G)");
    return c;
  }
  for (const Cell& q : cells_within(X, b)) {
    int m = (int)q.out.size(), k = (int)q.in.size();
    int span = X.has_merges() ? n : 1;
    if (span != n) break;
    for (int j1 = 1; j1 + n - 1 <= m; ++j1)
      if (slice(q.out, j1, j1 + n - 1) == p.in) {
        ++c.instances;
        if (merge(X, q, j1, j1 + n - 1, p, 1, n) != q)
          c.fail("merge(" + show(X, q) + ",[" + std::to_string(j1) + "],p)");
      }
    for (int i1 = 1; i1 + n - 1 <= k; ++i1)
      if (slice(q.in, i1, i1 + n - 1) == p.out) {
        ++c.instances;
        if (merge(X, p, 1, n, q, i1, i1 + n - 1) != q)
          c.fail("merge(p," + show(X, q) + ",[" + std::to_string(i1) + "])");
      }
    if (!c.holds) break;
  }
  return c;
}

std::optional<Cell> find_seq_unit(const Structure& X, const Word& g,
                                  const Budget& b) {
  if (g.size() == 1) return find_unit2(X, g[0], b);
  std::string key = "sequnit/" + show_word(X, g) + "/" + b.str();
  auto it = X.cell_memo.find(key);
  if (it != X.cell_memo.end()) {
    if (it->second.empty()) return std::nullopt;
    return it->second[0];
  }
  std::optional<Cell> r;
  for (const Cell& p : hom(X, g, g))
    if (is_seq_unit(X, p, b).holds) {
      r = p;
      break;
    }
  X.cell_memo[key] = r ? std::vector<Cell>{*r} : std::vector<Cell>{};
  return r;
}

Certificate is_divisible_interval(const Structure& X, const Cell& t, Side side,
                                  int k1, int k2, const Budget& b) {
  return is_divisible_at(X, t, side, k1, k2, b);
}

bool divisible_full(const Structure& X, const Cell& t, const Budget& b) {
  return divisible(X, t, Side::output, 1, (int)t.out.size(), b) &&
         divisible(X, t, Side::input, 1, (int)t.in.size(), b);
}

bool divisible1_merge(const SPtr& X, int e, const Budget& b) {
  SPtr U = underlying_polybicat(X);
  return is_divisible1(U, e, Divis::tensor, b).holds &&
         is_divisible1(U, e, Divis::par, b).holds;
}

Cell invert2(const Structure& X, const Cell& p, const Budget& b) {
  int n = (int)p.in.size(), m = (int)p.out.size();
  if (divisible(X, p, Side::output, 1, m, b)) {
    auto u = find_seq_unit(X, p.in, b);
    if (!u) throw NotDivisible("no unit on " + join_words(X, p.in));
    return divide(X, p, Side::output, 1, m, *u, 1);
  }
  if (divisible(X, p, Side::input, 1, n, b)) {
    auto u = find_seq_unit(X, p.out, b);
    if (!u) throw NotDivisible("no unit on " + join_words(X, p.out));
    return divide(X, p, Side::input, 1, n, *u, 1);
  }
  throw NotDivisible(show(X, p) + " is not divisible");
}

SPtr underlying_polybicat(SPtr X) {
  if (!X->has_merges()) return X;
  return std::make_shared<UnderlyingPoly>(std::move(X));
}

Report merge_representability_report(const SPtr& Xp, const Budget& b) {
  const Structure& X = *Xp;
  SPtr U = underlying_polybicat(Xp);
  SPtr coU = make_co(U);
  Report r;
  r.title = "merge representability " + X.label();
  r.budget = b;
  auto flag = [&](const std::string& k, bool v) {
    r.set(k, v ? "holds" : "fails");
  };
  bool unital = true;
  size_t seqs = 0;
  int len = std::min(b.max_in, X.single_output() ? 1 : b.max_out);
  for (int x = 0; x < X.num0(); ++x)
    for (int y = 0; y < X.num0(); ++y)
      for (const Word& g : X.words(x, y, len, b.max_seq)) {
        ++seqs;
        if (!find_seq_unit(X, g, b)) {
          unital = false;
          r.set("no-unit", show_word(X, g));
        }
      }
  flag("unital", unital);
  r.set("unit-sequences", std::to_string(seqs));

  bool d0 = true;
  for (int x = 0; x < X.num0(); ++x) {
    std::string found = "none";
    for (int e = 0; e < X.num1() && found == "none"; ++e)
      if ((X.src(e) == x || X.tgt(e) == x) && divisible1_merge(Xp, e, b))
        found = X.name1(e);
    if (found == "none") d0 = false;
    r.set("divisible-1-cell(" + X.name0(x) + ")", found);
  }
  bool d1 = true;
  for (int a = 0; a < X.num1(); ++a) {
    std::string found = "none";
    for (int c = 0; c < X.num1() && found == "none"; ++c) {
      for (const Cell& p : hom(X, {a}, {c}))
        if (divisible_full(X, p, b)) {
          found = show(X, p);
          break;
        }
      if (found != "none") break;
      for (const Cell& p : hom(X, {c}, {a}))
        if (divisible_full(X, p, b)) {
          found = show(X, p);
          break;
        }
    }
    if (found == "none") d1 = false;
    r.set("unary-divisible(" + X.name1(a) + ")", found);
  }
  bool d2 = true;
  for (int a = 0; a < X.num1(); ++a)
    for (int c = 0; c < X.num1(); ++c) {
      if (X.tgt(a) != X.src(c)) continue;
      std::string found = "none";
      for (int d = 0; d < X.num1() && found == "none"; ++d) {
        for (const Cell& p : hom(X, {a, c}, {d}))
          if (divisible_full(X, p, b)) {
            found = show(X, p);
            break;
          }
        if (found != "none" || X.single_output()) continue;
        for (const Cell& p : hom(X, {d}, {a, c}))
          if (divisible_full(X, p, b)) {
            found = show(X, p);
            break;
          }
      }
      if (found == "none") d2 = false;
      r.set("binary-divisible(" + X.name1(a) + "," + X.name1(c) + ")", found);
    }
  flag("divisible-1-cells", d0);
  flag("divisible-unary-2-cells", d1);
  flag("divisible-binary-2-cells", d2);
  flag("representable", unital && d0 && d1 && d2);

  // tensors and pars determine each other by inversion
  bool collapse = true;
  size_t pairs = 0;
  for (int a = 0; a < X.num1(); ++a)
    for (int c = 0; c < X.num1(); ++c) {
      if (X.tgt(a) != X.src(c)) continue;
      for (Kind k : {Kind::tensor, Kind::par}) {
        auto rep = search_representing(*U, k, a, c, b);
        if (!rep) continue;
        ++pairs;
        try {
          Cell inv = invert2(X, rep->cell, b);
          bool ok = k == Kind::tensor ? divisible(*U, inv, Side::input, 1, b)
                                      : divisible(*U, inv, Side::output, 1, b);
          if (!ok) {
            collapse = false;
            r.add("collapse", {{"cell", show(X, rep->cell)},
                               {"inverse", show(X, inv)}});
          }
        } catch (const Error& e) {
          collapse = false;
          r.add("collapse", {{"cell", show(X, rep->cell)}, {"error", e.what()}});
        }
      }
    }
  flag("tensor-par-collapse", collapse);
  r.set("collapse-instances", std::to_string(pairs));
  bool ucol = true;
  std::string units;
  for (int u = 0; u < X.num1(); ++u) {
    if (X.src(u) != X.tgt(u)) continue;
    bool t = is_tensor_unit1(*U, u, b).holds;
    bool p = is_tensor_unit1(*coU, u, b).holds;
    if (t && p) units += (units.empty() ? "" : ",") + X.name1(u);
    if (t != p && unital) {
      ucol = false;
      r.add("unit-collapse", {{"1-cell", X.name1(u)},
                              {"tensor-unit", t ? "holds" : "fails"},
                              {"par-unit", p ? "holds" : "fails"}});
    }
  }
  r.set("1-units", units.empty() ? "none" : units);
  flag("unit-collapse", ucol);
  return r;
}

// ---- morphisms ---------------------------------------------------------------

namespace {

class ComposedMorphism : public Morphism {
 public:
  ComposedMorphism(MPtr f, MPtr g) : f_(std::move(f)), g_(std::move(g)) {}
  std::string label() const override {
    return g_->label() + "." + f_->label();
  }
  int map0(int x) const override { return g_->map0(f_->map0(x)); }
  int map1(int a) const override { return g_->map1(f_->map1(a)); }
  Cell map2(const Cell& c) const override { return g_->map2(f_->map2(c)); }

 private:
  MPtr f_, g_;
};

}  // namespace

MPtr compose_morphisms(MPtr f, MPtr g) {
  return std::make_shared<ComposedMorphism>(std::move(f), std::move(g));
}

std::vector<MPtr> enumerate_morphisms(const Structure& X, const Structure& Y,
                                      const Budget& b, size_t limit) {
  std::vector<MPtr> res;
  auto cells = cells_within(X, b);
  std::map<Cell, int> index;
  for (size_t k = 0; k < cells.size(); ++k) index[cells[k]] = (int)k;
  struct Glue {
    int t, j1, j2, s, i1, i2, r;
  };
  std::vector<std::vector<Glue>> at(cells.size());
  for_each_gluing(X, cells, b, [&](const Cell& t, int j1, int j2,
                                   const Cell& s, int i1, int i2) {
    Cell r = merge(X, t, j1, j2, s, i1, i2);
    Glue g{index.at(t), j1, j2, index.at(s), i1, i2, index.at(r)};
    at[std::max({g.t, g.s, g.r})].push_back(g);
  });

  std::vector<int> m0(X.num0(), 0), m1(X.num1(), 0);
  size_t nodes = 0;
  std::function<void(int)> pick0, pick1;
  std::function<void(size_t, std::vector<Cell>&)> pick2;
  pick2 = [&](size_t k, std::vector<Cell>& img) {
    if (++nodes > 5000000) throw BudgetExceeded("morphism enumeration too large");
    if (k == cells.size()) {
      if (res.size() >= limit) throw BudgetExceeded("too many morphisms");
      auto table = std::make_shared<std::map<Cell, uint32_t>>();
      for (size_t i = 0; i < cells.size(); ++i) (*table)[cells[i]] = img[i].tag;
      std::string name = "m" + std::to_string(res.size());
      res.push_back(std::make_shared<FiniteMorphism>(
          name, m0, m1,
          [table](const Cell& c, const Word&, const Word&) -> uint32_t {
            auto it = table->find(c);
            if (it == table->end())
              throw BudgetExceeded("cell outside the enumerated morphism");
            return it->second;
          }));
      return;
    }
    Word in, out;
    for (int a : cells[k].in) in.push_back(m1[a]);
    for (int a : cells[k].out) out.push_back(m1[a]);
    uint32_t n = Y.hom_size(in, out);
    for (uint32_t tag = 0; tag < n; ++tag) {
      img[k] = {in, out, tag};
      bool ok = true;
      for (const Glue& g : at[k]) {
        Cell r = merge(Y, img[g.t], g.j1, g.j2, img[g.s], g.i1, g.i2);
        if (r != img[g.r]) {
          ok = false;
          break;
        }
      }
      if (ok) pick2(k + 1, img);
    }
  };
  pick1 = [&](int a) {
    if (a == X.num1()) {
      std::vector<Cell> img(cells.size());
      pick2(0, img);
      return;
    }
    for (int c = 0; c < Y.num1(); ++c)
      if (Y.src(c) == m0[X.src(a)] && Y.tgt(c) == m0[X.tgt(a)]) {
        m1[a] = c;
        pick1(a + 1);
      }
  };
  pick0 = [&](int x) {
    if (x == X.num0()) {
      pick1(0);
      return;
    }
    for (int y = 0; y < Y.num0(); ++y) {
      m0[x] = y;
      pick0(x + 1);
    }
  };
  pick0(0);
  return res;
}

// ---- transformations ----------------------------------------------------------

Cell transfor_ladder(const Structure& Y, const Transfor& s, const Word& w) {
  Cell l = s.comp1.at(w[0]);
  for (size_t k = 1; k < w.size(); ++k)
    l = cut(Y, s.comp1.at(w[k]), 1, l, (int)k + 1);
  return l;
}

Cell transfor_tower(const Structure& Y, const std::vector<Transfor>& ss, int a) {
  Cell t = ss[0].comp1.at(a);
  for (size_t k = 1; k < ss.size(); ++k)
    t = cut(Y, t, (int)k + 1, ss[k].comp1.at(a), 1);
  return t;
}

Transfor identity_transfor(const Structure& X, const Structure& Y, MPtr f,
                           const UnitWitnesses& wy, const Budget& b) {
  Transfor T;
  T.label = "1(" + f->label() + ")";
  T.src = f;
  T.tgt = f;
  for (int x = 0; x < X.num0(); ++x) T.comp0.push_back(wy.unit1.at(f->map0(x)));
  for (int a = 0; a < X.num1(); ++a) {
    int fa = f->map1(a);
    Cell linv = invert2(Y, wy.left.at(fa), b);
    T.comp1[a] = merge(Y, wy.right.at(fa), 1, 1, linv, 1, 1);
  }
  return T;
}

namespace {

// the two sides of the naturality equation of s at p, or nullopt if either
// side leaves the structure's table
std::optional<std::pair<Cell, Cell>> oplax_sides(const Structure& Y,
                                                 const Transfor& s,
                                                 const Cell& p) {
  try {
    int n = (int)p.in.size(), m = (int)p.out.size();
    Cell lhs = merge(Y, s.src->map2(p), 1, m, transfor_ladder(Y, s, p.out), 1, m);
    Cell rhs = merge(Y, transfor_ladder(Y, s, p.in), 2, n + 1, s.tgt->map2(p), 1, n);
    return std::make_pair(lhs, rhs);
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

std::optional<std::pair<Cell, Cell>> modification_sides(
    const Structure& Y, const Transfor& mu, int a, int x, int y) {
  try {
    int n = (int)mu.msrc.size(), m = (int)mu.mtgt.size();
    Cell lhs = merge(Y, transfor_tower(Y, mu.msrc, a), 1, n, mu.comp_cell[x], 1, n);
    Cell rhs = merge(Y, mu.comp_cell[y], 1, m, transfor_tower(Y, mu.mtgt, a), 2, m + 1);
    return std::make_pair(lhs, rhs);
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

// shape of every component; empty string when fine
std::string oplax_shape(const Structure& X, const Structure& Y, const Transfor& s) {
  if ((int)s.comp0.size() != X.num0()) return "missing 0-cell component";
  for (int x = 0; x < X.num0(); ++x) {
    int c = s.comp0[x];
    if (c < 0 || c >= Y.num1() || Y.src(c) != s.src->map0(x) ||
        Y.tgt(c) != s.tgt->map0(x))
      return "component at " + X.name0(x) + " has the wrong endpoints";
  }
  for (int a = 0; a < X.num1(); ++a) {
    auto it = s.comp1.find(a);
    if (it == s.comp1.end()) return "missing component at " + X.name1(a);
    const Cell& c = it->second;
    Word in{s.src->map1(a), s.comp0[X.tgt(a)]};
    Word out{s.comp0[X.src(a)], s.tgt->map1(a)};
    if (c.in != in || c.out != out || !valid_cell(Y, c))
      return "component at " + X.name1(a) + " has the wrong boundary";
  }
  return "";
}

}  // namespace

Report validate_transfor(const Transfor& T, const SPtr& Xp, const SPtr& Yp,
                         const Budget& b) {
  const Structure &X = *Xp, &Y = *Yp;
  Report r;
  r.budget = b;
  auto flag = [&](const std::string& k, bool v) {
    r.set(k, v ? "holds" : "fails");
  };
  if (T.kind == Transfor::Kind::modification) {
    r.title = "modification " + T.label;
    size_t n = 0;
    bool ok = (int)T.comp_cell.size() == X.num0() && !T.msrc.empty() &&
              !T.mtgt.empty();
    if (!ok) r.add("invalid-transfor", {{"detail", "missing components"}});
    for (int x = 0; ok && x < X.num0(); ++x) {
      Word in, out;
      for (const Transfor& s : T.msrc) in.push_back(s.comp0[x]);
      for (const Transfor& s : T.mtgt) out.push_back(s.comp0[x]);
      const Cell& c = T.comp_cell[x];
      if (c.in != in || c.out != out || !valid_cell(Y, c)) {
        r.add("invalid-transfor", {{"0-cell", X.name0(x)}, {"detail", "boundary"}});
        ok = false;
      }
    }
    for (int a = 0; ok && a < X.num1(); ++a) {
      auto sides = modification_sides(Y, T, a, X.src(a), X.tgt(a));
      if (!sides) continue;
      ++n;
      if (sides->first != sides->second)
        r.add("invalid-transfor",
              {{"equation", "modification"}, {"1-cell", X.name1(a)},
               {"lhs", show(Y, sides->first)}, {"rhs", show(Y, sides->second)}});
    }
    flag("valid", r.ok());
    r.set("instances", std::to_string(n));
    if (r.ok()) {
      bool div = true;
      for (const Cell& c : T.comp_cell) div = div && divisible_full(Y, c, b);
      flag("divisible-pointwise", div);
    }
    return r;
  }

  r.title = "oplax transformation " + T.label;
  std::string shape = oplax_shape(X, Y, T);
  if (!shape.empty()) {
    r.add("invalid-transfor", {{"detail", shape}});
    flag("valid", false);
    return r;
  }
  size_t n = 0;
  for (const Cell& p : cells_within(X, b)) {
    auto sides = oplax_sides(Y, T, p);
    if (!sides) continue;
    ++n;
    if (sides->first != sides->second)
      r.add("invalid-transfor",
            {{"equation", "oplax-natural"}, {"cell", show(X, p)},
             {"lhs", show(Y, sides->first)}, {"rhs", show(Y, sides->second)}});
  }
  flag("valid", r.ok());
  r.set("instances", std::to_string(n));
  if (!r.ok()) return r;

  // fairness: the shortcut through 1-units, then every divisible 1-cell
  SPtr U = underlying_polybicat(Xp);
  SPtr coU = make_co(U);
  bool fair_units = true, fair_all = true;
  std::string units, divs;
  for (int e = 0; e < X.num1(); ++e) {
    bool unit1 = X.src(e) == X.tgt(e) && is_tensor_unit1(*U, e, b).holds &&
                 is_tensor_unit1(*coU, e, b).holds;
    bool dv = divisible1_merge(Xp, e, b);
    bool comp = divisible_full(Y, T.comp1.at(e), b);
    if (unit1) {
      units += (units.empty() ? "" : ",") + X.name1(e);
      fair_units = fair_units && comp;
    }
    if (dv) {
      divs += (divs.empty() ? "" : ",") + X.name1(e);
      fair_all = fair_all && comp;
    }
  }
  r.set("fair-checked-units", units.empty() ? "none" : units);
  r.set("fair-checked-divisible", divs.empty() ? "none" : divs);
  flag("fair-shortcut", fair_units);
  flag("fair", fair_all);
  bool pn = true;
  for (const auto& [a, c] : T.comp1) pn = pn && divisible_full(Y, c, b);
  flag("pseudo-natural", pn);
  bool pe = pn;
  for (int c : T.comp0) pe = pe && divisible1_merge(Yp, c, b);
  flag("pseudo-equivalence", pe);
  return r;
}

Certificate verify_equivalence(const EquivalenceData& E, const SPtr& X,
                               const SPtr& Y, const Budget& b) {
  Certificate c;
  c.property = "equivalence";
  c.subject = E.f->label();
  c.budget = b;
  Report rf = check_morphism(*E.f, *X, *Y, b);
  Report rg = check_morphism(*E.g, *Y, *X, b);
  c.witnesses.push_back({"f", rf.ok() ? "valid" : "invalid"});
  c.witnesses.push_back({"g", rg.ok() ? "valid" : "invalid"});
  if (!rf.ok()) c.fail("f is not a morphism");
  if (!rg.ok()) c.fail("g is not a morphism");
  if (!c.holds) return c;
  auto check = [&](const char* name, Transfor T, MPtr src, MPtr tgt,
                   const SPtr& S, const SPtr& Tg) {
    T.src = std::move(src);
    T.tgt = std::move(tgt);
    Report r = validate_transfor(T, S, Tg, b);
    auto get = [&](const std::string& k) {
      for (const auto& [kk, v] : r.info)
        if (kk == k) return v;
      return std::string("fails");
    };
    for (const auto& [k, v] : r.info)
      if (k == "instances") c.instances += std::stoul(v);
    std::string pe = get("pseudo-equivalence");
    c.witnesses.push_back({name, std::string(r.ok() ? "valid" : "invalid") +
                                     " pseudo-equivalence=" + pe});
    if (!r.ok()) c.fail(std::string(name) + " is not an oplax transformation");
    else if (pe != "holds")
      c.fail(std::string(name) + " is not a pseudo-natural equivalence");
  };
  check("eta", E.eta, identity_morphism(*X), compose_morphisms(E.f, E.g), X, X);
  check("eps", E.eps, identity_morphism(*Y), compose_morphisms(E.g, E.f), Y, Y);
  return c;
}

// ---- the left hom -------------------------------------------------------------

HomObject::HomObject(SPtr X, SPtr Y, Budget b, size_t limit)
    : X_(std::move(X)), Y_(std::move(Y)), b_(b) {
  const Structure &Xs = *X_, &Ys = *Y_;
  morphisms_ = enumerate_morphisms(Xs, Ys, b_, limit);
  auto cells = cells_within(Xs, b_);
  for (size_t fi = 0; fi < morphisms_.size(); ++fi)
    for (size_t gi = 0; gi < morphisms_.size(); ++gi) {
      Transfor T;
      T.src = morphisms_[fi];
      T.tgt = morphisms_[gi];
      T.comp0.assign(Xs.num0(), -1);
      std::function<void(int)> pick0;
      std::function<void(int)> pick1 = [&](int a) {
        if (a == Xs.num1()) {
          for (const Cell& p : cells) {
            auto sides = oplax_sides(Ys, T, p);
            if (sides && sides->first != sides->second) return;
          }
          if (transfors_.size() >= limit)
            throw BudgetExceeded("too many transformations");
          T.label = "s" + std::to_string(transfors_.size());
          transfors_.push_back(T);
          src_.push_back((int)fi);
          tgt_.push_back((int)gi);
          return;
        }
        Word in{T.src->map1(a), T.comp0[Xs.tgt(a)]};
        Word out{T.comp0[Xs.src(a)], T.tgt->map1(a)};
        for (const Cell& c : hom(Ys, in, out)) {
          T.comp1[a] = c;
          pick1(a + 1);
        }
        T.comp1.erase(a);
      };
      pick0 = [&](int x) {
        if (x == Xs.num0()) {
          pick1(0);
          return;
        }
        for (int c = 0; c < Ys.num1(); ++c)
          if (Ys.src(c) == T.src->map0(x) && Ys.tgt(c) == T.tgt->map0(x)) {
            T.comp0[x] = c;
            pick0(x + 1);
          }
      };
      pick0(0);
    }
}

std::string HomObject::label() const {
  return "[" + X_->label() + "," + Y_->label() + "]";
}

const std::vector<std::vector<Cell>>& HomObject::mods(const Word& in,
                                                      const Word& out) const {
  auto key = std::make_pair(in, out);
  auto it = mods_.find(key);
  if (it != mods_.end()) return it->second;
  std::vector<std::vector<Cell>> res;
  const Structure &Xs = *X_, &Ys = *Y_;
  if (!in.empty() && !out.empty() && parallel(*this, in, out)) {
    Transfor mu;
    mu.kind = Transfor::Kind::modification;
    for (int a : in) mu.msrc.push_back(transfors_[a]);
    for (int a : out) mu.mtgt.push_back(transfors_[a]);
    mu.comp_cell.resize(Xs.num0());
    std::function<void(int)> pick = [&](int x) {
      if (x == Xs.num0()) {
        for (int a = 0; a < Xs.num1(); ++a) {
          auto sides = modification_sides(Ys, mu, a, Xs.src(a), Xs.tgt(a));
          if (sides && sides->first != sides->second) return;
        }
        res.push_back(mu.comp_cell);
        return;
      }
      Word win, wout;
      for (const Transfor& s : mu.msrc) win.push_back(s.comp0[x]);
      for (const Transfor& s : mu.mtgt) wout.push_back(s.comp0[x]);
      for (const Cell& c : hom(Ys, win, wout)) {
        mu.comp_cell[x] = c;
        pick(x + 1);
      }
    };
    pick(0);
  }
  return mods_[key] = std::move(res);
}

uint32_t HomObject::hom_size(const Word& in, const Word& out) const {
  return (uint32_t)mods(in, out).size();
}

const std::vector<Cell>& HomObject::components(const Cell& c) const {
  return mods(c.in, c.out).at(c.tag);
}

uint32_t HomObject::compose(const Cell& t, int j1, int j2, const Cell& s,
                            int i1, int i2, const Word& rin,
                            const Word& rout) const {
  const auto& ct = components(t);
  const auto& cs = components(s);
  std::vector<Cell> r;
  for (size_t x = 0; x < ct.size(); ++x)
    r.push_back(merge(*Y_, ct[x], j1, j2, cs[x], i1, i2));
  const auto& all = mods(rin, rout);
  auto it = std::find(all.begin(), all.end(), r);
  if (it == all.end()) throw Error("pointwise merge is not a modification");
  return (uint32_t)(it - all.begin());
}

std::string HomObject::tag_name(const Cell& c) const {
  std::string s;
  for (const Cell& x : components(c)) s += (s.empty() ? "" : ";") + show(*Y_, x);
  return "<" + s + ">";
}

}  // namespace pw
