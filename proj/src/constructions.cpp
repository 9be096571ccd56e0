#include "polyweave/constructions.hpp"

#include <algorithm>
#include <functional>

namespace pw {

ChuStructure::ChuStructure(SPtr M, Budget b) : M_(std::move(M)), b_(b) {
  const Structure& X = *M_;
  if (!X.single_output())
    throw Error(X.label() + " is not a multi-bicategory");
  std::vector<int> zero_of(X.num1(), -1);
  for (int e = 0; e < X.num1(); ++e)
    if (X.src(e) == X.tgt(e)) {
      zero_of[e] = (int)endo_.size();
      endo_.push_back(e);
    }
  for (int a = 0; a < num0(); ++a)
    for (int c = 0; c < num0(); ++c) {
      int x = X.src(endo_[a]), y = X.src(endo_[c]);
      for (int A = 0; A < X.num1(); ++A) {
        if (X.src(A) != x || X.tgt(A) != y) continue;
        for (int Ad = 0; Ad < X.num1(); ++Ad) {
          if (X.src(Ad) != y || X.tgt(Ad) != x) continue;
          for (const Cell& e : hom(X, {A, Ad}, {endo_[a]}))
            for (const Cell& ed : hom(X, {Ad, A}, {endo_[c]}))
              one_.push_back({a, c, A, Ad, e, ed});
        }
      }
    }
  for (const ChuOneCell& c : one_) {
    int d = find({c.b, c.a, c.Adual, c.A, c.eAdual, c.eA});
    if (d < 0) throw Error("Chu 1-cells are not closed under duality");
    dual_.push_back(d);
  }
}

std::string ChuStructure::name1(int a) const {
  const ChuOneCell& c = one_[a];
  std::string s = "(" + M_->name1(c.A) + "," + M_->name1(c.Adual) + ")";
  if (!M_->thin())
    s += "#" + std::to_string(c.eA.tag) + "." + std::to_string(c.eAdual.tag);
  return s;
}

int ChuStructure::find(const ChuOneCell& c) const {
  auto it = std::find(one_.begin(), one_.end(), c);
  return it == one_.end() ? -1 : (int)(it - one_.begin());
}

Word ChuStructure::dual_word(const Word& w) const {
  Word r;
  for (int a : w) r.push_back(dual_[a]);
  return r;
}

Word ChuStructure::type(const Word& in, const Word& out) const {
  Word t = in;
  for (auto it = out.rbegin(); it != out.rend(); ++it) t.push_back(dual_[*it]);
  return t;
}

namespace {

// M-boundary of the k-th component of a band of type t
void component_shape(const ChuStructure& C, const Word& t, size_t k, Word& in,
                     Word& out) {
  size_t n = t.size();
  in.clear();
  for (size_t s = 1; s < n; ++s) in.push_back(C.one(t[(k + s) % n]).A);
  out = {C.one(t[k]).Adual};
}

}  // namespace

std::string ChuStructure::band_failure(const Word& t, const Band& p) const {
  const Structure& X = *M_;
  size_t n = t.size();
  if (n < 2) return "bands have at least two components";
  if (p.size() != n) return "wrong number of components";
  for (size_t k = 0; k < n; ++k) {
    Word in, out;
    component_shape(*this, t, k, in, out);
    if (p[k].in != in || p[k].out != out || !valid_cell(X, p[k]))
      return "component " + std::to_string(k + 1) + " has the wrong boundary";
  }
  for (size_t k = 0; k < n; ++k) {
    size_t k1 = (k + 1) % n;
    Cell lhs = cut(X, p[k], 1, one_[t[k]].eAdual, 1);
    Cell rhs = cut(X, p[k1], 1, one_[t[k1]].eA, 2);
    if (lhs != rhs)
      return "equation " + std::to_string(k + 1) + ": " + show(X, lhs) +
             " != " + show(X, rhs);
  }
  return "";
}

const std::vector<Band>& ChuStructure::bands(const Word& in,
                                             const Word& out) const {
  auto key = std::make_pair(in, out);
  auto it = bands_.find(key);
  if (it != bands_.end()) return it->second;
  std::vector<Band> res;
  if (!in.empty() && !out.empty() && parallel(*this, in, out)) {
    const Structure& X = *M_;
    Word t = type(in, out);
    size_t n = t.size();
    std::vector<std::vector<Cell>> cand(n);
    for (size_t k = 0; k < n; ++k) {
      Word ci, co;
      component_shape(*this, t, k, ci, co);
      cand[k] = hom(X, ci, co);
    }
    Band p(n);
    auto eq = [&](size_t k) {
      size_t k1 = (k + 1) % n;
      return cut(X, p[k], 1, one_[t[k]].eAdual, 1) ==
             cut(X, p[k1], 1, one_[t[k1]].eA, 2);
    };
    std::function<void(size_t)> go = [&](size_t k) {
      if (k == n) {
        if (eq(n - 1)) res.push_back(p);
        return;
      }
      for (const Cell& c : cand[k]) {
        p[k] = c;
        if (k > 0 && !eq(k - 1)) continue;
        go(k + 1);
      }
    };
    go(0);
  }
  return bands_[key] = std::move(res);
}

uint32_t ChuStructure::hom_size(const Word& in, const Word& out) const {
  return (uint32_t)bands(in, out).size();
}

Cell ChuStructure::cell_of(const Word& in, const Word& out,
                           const Band& p) const {
  const auto& all = bands(in, out);
  auto it = std::find(all.begin(), all.end(), p);
  if (it == all.end()) {
    std::string why = band_failure(type(in, out), p);
    throw Error("not a Chu band of type " + show_word(*this, type(in, out)) +
                (why.empty() ? "" : ": " + why));
  }
  return {in, out, (uint32_t)(it - all.begin())};
}

// Each component of the composite comes from one side; it is that side's
// component with the other side's component for the glued 1-cell plugged in
// where that 1-cell occurs.
uint32_t ChuStructure::compose(const Cell& t, int j1, int, const Cell& s,
                               int i1, int, const Word& rin,
                               const Word& rout) const {
  const Structure& X = *M_;
  const Band &p = band(t), &q = band(s);
  Word tp = type(t.in, t.out), tq = type(s.in, s.out);
  int np = (int)tp.size(), nq = (int)tq.size();
  int gamma = (int)t.in.size() + (int)t.out.size() - j1;  // C' in tp
  int iq = i1 - 1;                                         // C in tq
  struct Origin {
    bool from_p;
    int pos;
  };
  std::vector<Origin> cyc;
  for (int k = 0; k < np; ++k) {
    if (k != gamma) {
      cyc.push_back({true, k});
      continue;
    }
    for (int s2 = 1; s2 < nq; ++s2) cyc.push_back({false, (iq + s2) % nq});
  }
  Origin first = i1 > 1 ? Origin{false, 0} : Origin{true, 0};
  auto start = std::find_if(cyc.begin(), cyc.end(), [&](const Origin& o) {
    return o.from_p == first.from_p && o.pos == first.pos;
  });
  std::rotate(cyc.begin(), start, cyc.end());
  Word tr = type(rin, rout);
  Band r;
  for (size_t k = 0; k < cyc.size(); ++k) {
    const Origin& o = cyc[k];
    int ty = o.from_p ? tp[o.pos] : tq[o.pos];
    if (ty != tr[k])
      throw Error("Chu composite does not match the typing: " + show(*this, t) +
                  " j" + std::to_string(j1) + " " + show(*this, s) + " i" +
                  std::to_string(i1));
    if (o.from_p) {
      int at = (gamma - o.pos - 1 + np) % np;
      r.push_back(cut(X, q[iq], 1, p[o.pos], at + 1));
    } else {
      int at = (iq - o.pos - 1 + nq) % nq;
      r.push_back(cut(X, p[gamma], 1, q[o.pos], at + 1));
    }
  }
  try {
    return cell_of(rin, rout, r).tag;
  } catch (const Error& e) {
    throw Error(std::string(e.what()) + " in " + show(*this, t) + " j" +
                std::to_string(j1) + " " + show(*this, s) + " i" +
                std::to_string(i1));
  }
}

std::string ChuStructure::tag_name(const Cell& c) const {
  std::string s;
  for (const Cell& x : band(c)) s += (s.empty() ? "" : ";") + show(*M_, x);
  return "<" + s + ">";
}

std::shared_ptr<const ChuStructure> chu_build(SPtr M, const Budget& b) {
  return std::make_shared<const ChuStructure>(std::move(M), b);
}

Report check_chu_bands(const ChuStructure& C, const Budget& b) {
  Report r;
  r.title = "Chu bands " + C.label();
  r.budget = b;
  size_t n = 0;
  for (const Cell& c : cells_within(C, b)) {
    ++n;
    std::string why = C.band_failure(C.type(c.in, c.out), C.band(c));
    if (!why.empty()) r.add("band", {{"cell", show(C, c)}, {"detail", why}});
  }
  size_t g = 0;
  auto cells = cells_within(C, b);
  for_each_gluing(C, cells, b, [&](const Cell& t, int j1, int j2, const Cell& s,
                                   int i1, int i2) {
    ++g;
    try {
      merge(C, t, j1, j2, s, i1, i2);
    } catch (const Error& e) {
      r.add("composite", {{"gluing", gluing_name(C, t, j1, j2, s, i1, i2)},
                          {"detail", e.what()}});
    }
  });
  r.set("bands", std::to_string(n));
  r.set("composites", std::to_string(g));
  return r;
}

bool ChuUnit::holds() const {
  return std::all_of(certs.begin(), certs.end(),
                     [](const Certificate& c) { return c.holds; });
}

ChuUnit chu_unit_synthesize(const ChuStructure& C, const UnitWitnesses& w,
                            int a, const Budget& b) {
  const Structure& M = C.base();
  ChuUnit U;
  U.a = a;
  int ea = C.endo(a), x = M.src(ea);
  if (!w.coherent) throw Error("unit witnesses are not coherent");
  int ux = w.unit1.at(x);
  U.unit = C.find({a, a, ux, ea, w.left.at(ea), w.right.at(ea)});
  Certificate found;
  found.property = "chu-unit-1-cell";
  found.subject = C.name0(a);
  found.budget = b;
  if (U.unit < 0) {
    found.fail("(1_x, a, l_a, r_a) is not a Chu 1-cell");
    U.certs.push_back(found);
    return U;
  }
  found.witnesses.push_back({"1_a", C.name1(U.unit)});
  U.certs.push_back(found);
  for (int A = 0; A < C.num1(); ++A) {
    const ChuOneCell& c = C.one(A);
    int Ad = C.dual(A);
    // l_A : (1_a, A) -> (A), type (1_a, A, A')
    if (c.a == a) {
      Band l{c.eA, w.right.at(c.Adual), w.left.at(c.A)};
      Certificate cert;
      cert.property = "chu-left-unitor";
      cert.subject = C.name1(A);
      cert.budget = b;
      std::string why = C.band_failure({U.unit, A, Ad}, l);
      if (!why.empty()) {
        cert.fail(why);
      } else {
        Cell lc = C.cell_of({U.unit, A}, {A}, l);
        U.left[A] = lc;
        cert.witnesses.push_back({"l_A", show(C, lc)});
        for (auto [side, k] : {std::pair{Side::output, 1}, {Side::input, 2}}) {
          auto d = is_divisible_at(C, lc, side, k, b);
          cert.instances += d.instances;
          if (!d.holds) cert.fail("not divisible at " + side_mark(side, k, k));
        }
      }
      U.certs.push_back(cert);
    }
    // r_A : (A, 1_b) -> (A), type (A, 1_b, A') with 1_b = 1_a here
    if (c.b == a) {
      Band r{w.left.at(c.Adual), c.eAdual, w.right.at(c.A)};
      Certificate cert;
      cert.property = "chu-right-unitor";
      cert.subject = C.name1(A);
      cert.budget = b;
      std::string why = C.band_failure({A, U.unit, Ad}, r);
      if (!why.empty()) {
        cert.fail(why);
      } else {
        Cell rc = C.cell_of({A, U.unit}, {A}, r);
        U.right[A] = rc;
        cert.witnesses.push_back({"r_A", show(C, rc)});
        for (auto [side, k] : {std::pair{Side::output, 1}, {Side::input, 1}}) {
          auto d = is_divisible_at(C, rc, side, k, b);
          cert.instances += d.instances;
          if (!d.holds) cert.fail("not divisible at " + side_mark(side, k, k));
        }
      }
      U.certs.push_back(cert);
    }
  }
  U.certs.push_back(is_tensor_unit1(C, U.unit, b));
  return U;
}

namespace {

class ChuDual : public Morphism {
 public:
  explicit ChuDual(std::shared_ptr<const ChuStructure> C) : C_(std::move(C)) {}
  std::string label() const override { return "dual(" + C_->label() + ")"; }
  int map0(int x) const override { return x; }
  int map1(int a) const override { return C_->dual(a); }
  // a band (A1..An) -> (B1..Bm) read as (Bm'..B1') -> (An'..A1') in Chu,
  // which is (A1'..An') -> (B1'..Bm') in co(op(Chu))
  Cell map2(const Cell& c) const override {
    const Band& p = C_->band(c);
    Word in = C_->dual_word(c.out), out = C_->dual_word(c.in);
    std::reverse(in.begin(), in.end());
    std::reverse(out.begin(), out.end());
    size_t n = c.in.size(), N = p.size();
    Band q(N);
    for (size_t k = 0; k < N; ++k) q[k] = p[(k + n) % N];
    Cell base = C_->cell_of(in, out, q);
    return {C_->dual_word(c.in), C_->dual_word(c.out), base.tag};
  }

 private:
  std::shared_ptr<const ChuStructure> C_;
};

}  // namespace

MPtr chu_involution(const std::shared_ptr<const ChuStructure>& C) {
  return std::make_shared<ChuDual>(C);
}

Certificate chu_involution_check(const std::shared_ptr<const ChuStructure>& C,
                                 const Budget& b) {
  Certificate c;
  c.property = "chu-involution";
  c.subject = C->label();
  c.budget = b;
  SPtr coop = make_co(make_op(C));
  MPtr d = chu_involution(C);
  for (int A = 0; A < C->num1(); ++A) {
    ++c.instances;
    if (C->dual(C->dual(A)) != A) c.fail("A'' != A at " + C->name1(A));
  }
  std::map<Cell, Cell> seen;
  for (const Cell& x : cells_within(*C, b)) {
    ++c.instances;
    Cell y = d->map2(x);
    // read the image back in Chu and apply the involution again
    Cell back = d->map2(OpView::to_base(CoView::to_base(y)));
    Cell twice = OpView::to_base(CoView::to_base(back));
    if (twice != x) c.fail("not involutive at " + show(*C, x));
    if (!seen.emplace(y, x).second) c.fail("not injective at " + show(*C, x));
  }
  Report m = check_morphism(*d, *C, *coop, b);
  c.witnesses.push_back({"morphism", m.ok() ? "valid" : "invalid"});
  if (!m.ok()) c.fail("does not preserve cuts");
  return c;
}

std::pair<Cell, Certificate> chu_adjunction_witness(const ChuStructure& C,
                                                    const UnitWitnesses& w,
                                                    int A, const Budget& b) {
  const Structure& M = C.base();
  const ChuOneCell& c = C.one(A);
  int Ad = C.dual(A);
  Certificate cert;
  cert.property = "chu-adjunction";
  cert.subject = C.name1(Ad) + "-|" + C.name1(A);
  cert.budget = b;
  auto unit_on = [&](int a) {
    int ea = C.endo(a);
    return C.find({a, a, w.unit1.at(M.src(ea)), ea, w.left.at(ea),
                   w.right.at(ea)});
  };
  int ua = unit_on(c.a), ub = unit_on(c.b);
  if (ua < 0 || ub < 0) {
    cert.fail("missing synthesized unit");
    return {Cell{}, cert};
  }
  int bot = C.dual(ua);
  Band e{w.right.at(c.Adual), w.left.at(c.A), c.eA};
  std::string why = C.band_failure({A, Ad, ua}, e);
  if (!why.empty()) {
    cert.fail(why);
    return {Cell{}, cert};
  }
  Cell ec = C.cell_of({A, Ad}, {bot}, e);
  cert.witnesses.push_back({"epsilon", show(C, ec)});
  for (int k : {1, 2}) {
    auto d = is_divisible_at(C, ec, Side::input, k, b);
    cert.instances += d.instances;
    if (!d.holds) cert.fail("not divisible at " + side_mark(Side::input, k, k));
  }
  Certificate adj = check_linear_adjunction(C, Ad, A, ub, bot, b);
  cert.witnesses.push_back({"adjunction", verdict(adj)});
  if (!adj.holds) cert.fail("no linear adjunction");
  return {ec, cert};
}

}  // namespace pw
