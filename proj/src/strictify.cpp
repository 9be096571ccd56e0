#include "polyweave/strictify.hpp"

#include <functional>

namespace pw {

namespace {

class FnMorphism : public Morphism {
 public:
  FnMorphism(std::string label, std::function<int(int)> m0,
             std::function<int(int)> m1, std::function<Cell(const Cell&)> m2)
      : label_(std::move(label)),
        m0_(std::move(m0)),
        m1_(std::move(m1)),
        m2_(std::move(m2)) {}
  std::string label() const override { return label_; }
  int map0(int x) const override { return m0_(x); }
  int map1(int a) const override { return m1_(a); }
  Cell map2(const Cell& c) const override { return m2_(c); }

 private:
  std::string label_;
  std::function<int(int)> m0_, m1_;
  std::function<Cell(const Cell&)> m2_;
};

int same(int x) { return x; }

// 1-based positions k1..k2 of w, counted among the entries kept by keep
template <class Keep>
std::pair<int, int> kept_interval(const Word& w, int k1, int k2, Keep keep) {
  int before = 0, upto = 0;
  for (int k = 1; k <= k2; ++k)
    if (keep(w[k - 1])) {
      if (k < k1) ++before;
      ++upto;
    }
  return {before + 1, upto};
}

}  // namespace

// ---- I(X) ----------------------------------------------------------------------

InflatedStructure::InflatedStructure(SPtr X)
    : X_(std::move(X)), n0_(X_->num0()) {}

int InflatedStructure::src(int u) const {
  return is_eps(u) ? u : X_->src(lower1(u));
}

int InflatedStructure::tgt(int u) const {
  return is_eps(u) ? u : X_->tgt(lower1(u));
}

std::string InflatedStructure::name1(int u) const {
  return is_eps(u) ? "e" + X_->name0(u) : X_->name1(lower1(u));
}

int InflatedStructure::weight1(int u) const {
  return is_eps(u) ? 1 : X_->weight1(lower1(u));
}

Word InflatedStructure::lift_word(const Word& w) const {
  Word r;
  for (int a : w) r.push_back(lift1(a));
  return r;
}

Word InflatedStructure::collapse(const Word& w) const {
  Word r;
  for (int u : w)
    if (!is_eps(u)) r.push_back(lower1(u));
  return r;
}

uint32_t InflatedStructure::formal_tag(const Word& in, const Word& out) const {
  Word ci = collapse(in), co = collapse(out);
  if (ci.empty()) return 0;
  return X_->hom_size(ci, co);
}

bool InflatedStructure::is_formal(const Cell& c) const {
  return c.tag == formal_tag(c.in, c.out);
}

Cell InflatedStructure::core(const Cell& c) const {
  return {collapse(c.in), collapse(c.out), c.tag};
}

Cell InflatedStructure::decorate(const Cell& p, const Word& in,
                                 const Word& out) const {
  if (collapse(in) != p.in || collapse(out) != p.out)
    throw Error("decoration does not collapse to " + show(*X_, p));
  return {in, out, p.tag};
}

Cell InflatedStructure::formal(const Word& in, const Word& out) const {
  if (collapse(in) != collapse(out))
    throw Error("formal unit on unequal collapses");
  return {in, out, formal_tag(in, out)};
}

uint32_t InflatedStructure::hom_size(const Word& in, const Word& out) const {
  Word ci = collapse(in), co = collapse(out);
  if (ci.empty() || co.empty()) return ci.empty() && co.empty() ? 1 : 0;
  return X_->hom_size(ci, co) + (ci == co ? 1 : 0);
}

uint32_t InflatedStructure::compose(const Cell& t, int j1, int j2,
                                    const Cell& s, int i1, int i2,
                                    const Word& rin, const Word& rout) const {
  auto keep = [&](int u) { return !is_eps(u); };
  auto [T1, T2] = kept_interval(t.out, j1, j2, keep);
  auto [S1, S2] = kept_interval(s.in, i1, i2, keep);
  bool tf = is_formal(t), sf = is_formal(s);
  auto outside = [&]() {
    return BudgetExceeded("composite of " + show(*this, t) + " and " +
                          show(*this, s) +
                          " leaves the single-core normal forms");
  };
  if (tf && sf) {
    if (collapse(rin) != collapse(rout)) throw outside();
    return formal_tag(rin, rout);
  }
  // a formal unit is neutral when the gluing covers its whole collapse
  if (tf) {
    if (T2 - T1 + 1 != (int)collapse(t.out).size()) throw outside();
    return s.tag;
  }
  if (sf) {
    if (S2 - S1 + 1 != (int)collapse(s.in).size()) throw outside();
    return t.tag;
  }
  if (T2 < T1) throw outside();
  Cell r = merge(*X_, core(t), T1, T2, core(s), S1, S2);
  return r.tag;
}

std::string InflatedStructure::tag_name(const Cell& c) const {
  if (is_formal(c)) return "eps";
  return X_->tag_name(core(c));
}

// ---- M(X) ----------------------------------------------------------------------

MergedStructure::MergedStructure(SPtr X, int max_weight)
    : X_(std::move(X)), max_weight_(max_weight) {
  for (const Word& w : X_->words(-1, -1, max_weight, max_weight)) id(w);
  universe_ = (int)seqs_.size();
}

int MergedStructure::id(const Word& seq) const {
  auto it = ids_.find(seq);
  if (it != ids_.end()) return it->second;
  if (seq.empty() || !composable(*X_, seq))
    throw Error("not a composable sequence: " + show_word(*X_, seq));
  int a = (int)seqs_.size();
  seqs_.push_back(seq);
  weights_.push_back(X_->weight(seq));
  ids_[seq] = a;
  return a;
}

std::string MergedStructure::name1(int a) const {
  std::string s = "<";
  for (size_t k = 0; k < seqs_[a].size(); ++k)
    s += (k ? "," : "") + X_->name1(seqs_[a][k]);
  return s + ">";
}

Word MergedStructure::flatten(const Word& w) const {
  Word r;
  for (int a : w) r.insert(r.end(), seqs_[a].begin(), seqs_[a].end());
  return r;
}

uint32_t MergedStructure::hom_size(const Word& in, const Word& out) const {
  return X_->hom_size(flatten(in), flatten(out));
}

uint32_t MergedStructure::compose(const Cell& t, int j1, int j2, const Cell& s,
                                  int i1, int i2, const Word&,
                                  const Word&) const {
  auto span = [&](const Word& w, int k1, int k2) {
    int before = 0, upto = 0;
    for (int k = 1; k <= k2; ++k) {
      int n = (int)seqs_[w[k - 1]].size();
      if (k < k1) before += n;
      upto += n;
    }
    return std::make_pair(before + 1, upto);
  };
  auto [T1, T2] = span(t.out, j1, j2);
  auto [S1, S2] = span(s.in, i1, i2);
  return merge(*X_, flat(t), T1, T2, flat(s), S1, S2).tag;
}

std::string MergedStructure::tag_name(const Cell& c) const {
  return X_->tag_name(flat(c));
}

Cell MergedStructure::group(const Cell& p, const Word& in,
                            const Word& out) const {
  if (flatten(in) != p.in || flatten(out) != p.out)
    throw Error("partition does not flatten to " + show(*X_, p));
  return {in, out, p.tag};
}

Word MergedStructure::blocks(const Word& w, const std::vector<int>& sizes) const {
  Word r;
  size_t at = 0;
  for (int n : sizes) {
    if (n < 1 || at + n > w.size()) throw Error("bad partition");
    r.push_back(id(Word(w.begin() + at, w.begin() + at + n)));
    at += n;
  }
  if (at != w.size()) throw Error("partition does not cover the sequence");
  return r;
}

std::shared_ptr<const InflatedStructure> inflate_build(SPtr X) {
  return std::make_shared<const InflatedStructure>(std::move(X));
}

std::shared_ptr<const MergedStructure> merge_build(SPtr X, int max_weight) {
  return std::make_shared<const MergedStructure>(std::move(X), max_weight);
}

// ---- the kit --------------------------------------------------------------------

MonadKit::MonadKit(SPtr X, int max_weight)
    : X_(std::move(X)), max_weight_(max_weight) {}

SPtr MonadKit::get(const std::string& path) const {
  if (path == "X") return X_;
  auto it = cache_.find(path);
  if (it != cache_.end()) return it->second;
  if (path.size() < 2 || path.back() != 'X') throw Error("bad path " + path);
  SPtr inner = get(path.substr(1));
  SPtr r;
  if (path[0] == 'I') r = inflate_build(inner);
  else if (path[0] == 'M') r = merge_build(inner, max_weight_);
  else throw Error("bad path " + path);
  return cache_[path] = r;
}

std::shared_ptr<const InflatedStructure> MonadKit::inflated(
    const std::string& path) const {
  auto r = std::dynamic_pointer_cast<const InflatedStructure>(get(path));
  if (!r) throw Error(path + " is not an inflation");
  return r;
}

std::shared_ptr<const MergedStructure> MonadKit::merged(
    const std::string& path) const {
  auto r = std::dynamic_pointer_cast<const MergedStructure>(get(path));
  if (!r) throw Error(path + " is not a merger");
  return r;
}

MPtr MonadKit::eta(const std::string& p) const {
  auto I = inflated("I" + p);
  return std::make_shared<FnMorphism>(
      "eta_" + p, same, [I](int a) { return I->lift1(a); },
      [I](const Cell& c) {
        return Cell{I->lift_word(c.in), I->lift_word(c.out), c.tag};
      });
}

MPtr MonadKit::mu(const std::string& p) const {
  auto II = inflated("II" + p);
  auto I = inflated("I" + p);
  auto m1 = [II, I](int u) { return II->is_eps(u) ? I->eps(u) : II->lower1(u); };
  return std::make_shared<FnMorphism>(
      "mu_" + p, same, m1, [II, I, m1](const Cell& c) {
        Word in, out;
        for (int u : c.in) in.push_back(m1(u));
        for (int u : c.out) out.push_back(m1(u));
        uint32_t tag = II->is_formal(c) ? I->formal_tag(in, out) : c.tag;
        return Cell{in, out, tag};
      });
}

MPtr MonadKit::zeta(const std::string& p) const {
  auto M = merged("M" + p);
  auto m1 = [M](int a) { return M->id({a}); };
  return std::make_shared<FnMorphism>(
      "zeta_" + p, same, m1, [m1](const Cell& c) {
        Word in, out;
        for (int a : c.in) in.push_back(m1(a));
        for (int a : c.out) out.push_back(m1(a));
        return Cell{in, out, c.tag};
      });
}

MPtr MonadKit::nu(const std::string& p) const {
  auto MM = merged("MM" + p);
  auto M = merged("M" + p);
  auto m1 = [MM, M](int u) { return M->id(M->flatten(MM->seq(u))); };
  return std::make_shared<FnMorphism>(
      "nu_" + p, same, m1, [m1](const Cell& c) {
        Word in, out;
        for (int u : c.in) in.push_back(m1(u));
        for (int u : c.out) out.push_back(m1(u));
        return Cell{in, out, c.tag};
      });
}

MPtr MonadKit::sigma(const std::string& p) const {
  auto IM = inflated("IM" + p);
  auto MI = merged("MI" + p);
  auto I = inflated("I" + p);
  auto M = merged("M" + p);
  auto m1 = [IM, MI, I, M](int u) {
    if (IM->is_eps(u)) return MI->id({I->eps(u)});
    return MI->id(I->lift_word(M->seq(IM->lower1(u))));
  };
  return std::make_shared<FnMorphism>(
      "sigma_" + p, same, m1, [IM, MI, I, m1](const Cell& c) {
        Word in, out;
        for (int u : c.in) in.push_back(m1(u));
        for (int u : c.out) out.push_back(m1(u));
        uint32_t tag = IM->is_formal(c)
                           ? I->formal_tag(MI->flatten(in), MI->flatten(out))
                           : c.tag;
        return Cell{in, out, tag};
      });
}

MPtr MonadKit::lift_I(MPtr f, const std::string& dom,
                      const std::string& cod) const {
  auto ID = inflated("I" + dom);
  auto IC = inflated("I" + cod);
  auto m1 = [ID, IC, f](int u) {
    return ID->is_eps(u) ? IC->eps(f->map0(u)) : IC->lift1(f->map1(ID->lower1(u)));
  };
  return std::make_shared<FnMorphism>(
      "I(" + f->label() + ")", [f](int x) { return f->map0(x); }, m1,
      [ID, IC, f, m1](const Cell& c) {
        Word in, out;
        for (int u : c.in) in.push_back(m1(u));
        for (int u : c.out) out.push_back(m1(u));
        uint32_t tag = ID->is_formal(c) ? IC->formal_tag(in, out)
                                        : f->map2(ID->core(c)).tag;
        return Cell{in, out, tag};
      });
}

MPtr MonadKit::lift_M(MPtr f, const std::string& dom,
                      const std::string& cod) const {
  auto MD = merged("M" + dom);
  auto MC = merged("M" + cod);
  auto m1 = [MD, MC, f](int u) { return MC->id(f->map_word(MD->seq(u))); };
  return std::make_shared<FnMorphism>(
      "M(" + f->label() + ")", [f](int x) { return f->map0(x); }, m1,
      [MD, f, m1](const Cell& c) {
        Word in, out;
        for (int u : c.in) in.push_back(m1(u));
        for (int u : c.out) out.push_back(m1(u));
        return Cell{in, out, f->map2(MD->flat(c)).tag};
      });
}

MPtr MonadKit::eta_T(const std::string& p) const {
  return compose_morphisms(eta(p), zeta("I" + p));
}

MPtr MonadKit::mu_T(const std::string& p) const {
  MPtr ms = lift_M(sigma("I" + p), "IMI" + p, "MII" + p);
  MPtr mmu = lift_M(lift_M(mu(p), "II" + p, "I" + p), "MII" + p, "MI" + p);
  return compose_morphisms(compose_morphisms(ms, mmu), nu("I" + p));
}

MPtr MonadKit::lift_T(MPtr f, const std::string& dom,
                      const std::string& cod) const {
  return lift_M(lift_I(std::move(f), dom, cod), "I" + dom, "I" + cod);
}

// ---- law checks -----------------------------------------------------------------

namespace {

// lhs and rhs agree on every (sampled) cell of the domain; rhs null = identity
void check_law(Report& r, const std::string& law, const Structure& D,
               const MPtr& lhs, const MPtr& rhs, const Budget& b,
               size_t sample) {
  size_t n = 0, bad = 0;
  auto note = [&](const std::string& what, const std::string& l,
                  const std::string& rr) {
    if (++bad <= 5) r.add("law-fails", {{"law", law}, {"at", what}, {"lhs", l}, {"rhs", rr}});
  };
  for (int a = 0; a < D.num1(); ++a) {
    int l = lhs->map1(a), rr = rhs ? rhs->map1(a) : a;
    ++n;
    if (l != rr) note(D.name1(a), std::to_string(l), std::to_string(rr));
  }
  auto cells = cells_within(D, b);
  for (size_t k = 0; k < cells.size(); ++k) {
    if (sample > 1 && k % sample) continue;
    const Cell& c = cells[k];
    ++n;
    try {
      Cell l = lhs->map2(c), rr = rhs ? rhs->map2(c) : c;
      if (l != rr)
        note(show(D, c), std::to_string(l.tag) + "@" + std::to_string(l.in.size()),
             std::to_string(rr.tag) + "@" + std::to_string(rr.in.size()));
    } catch (const Error& e) {
      note(show(D, c), e.what(), "");
    }
  }
  r.set(law, std::string(bad ? "fails" : "holds") + " instances=" + std::to_string(n));
}

}  // namespace

Report verify_monad_laws(const SPtr& X, const Budget& b, size_t sample) {
  Report r;
  r.title = "monad laws on " + X->label();
  r.budget = b;
  MonadKit k(X, b.max_seq);
  auto C = [](MPtr f, MPtr g) { return compose_morphisms(std::move(f), std::move(g)); };
  auto law = [&](const std::string& name, const std::string& dom, MPtr lhs, MPtr rhs) {
    check_law(r, name, *k.get(dom), lhs, rhs, b, sample);
  };
  law("I-unit-left", "IX", C(k.eta("IX"), k.mu("X")), nullptr);
  law("I-unit-right", "IX", C(k.lift_I(k.eta("X"), "X", "IX"), k.mu("X")), nullptr);
  law("I-assoc", "IIIX", C(k.mu("IX"), k.mu("X")),
      C(k.lift_I(k.mu("X"), "IIX", "IX"), k.mu("X")));
  law("M-unit-left", "MX", C(k.zeta("MX"), k.nu("X")), nullptr);
  law("M-unit-right", "MX", C(k.lift_M(k.zeta("X"), "X", "MX"), k.nu("X")), nullptr);
  law("M-assoc", "MMMX", C(k.nu("MX"), k.nu("X")),
      C(k.lift_M(k.nu("X"), "MMX", "MX"), k.nu("X")));
  law("sigma-eta", "MX", C(k.eta("MX"), k.sigma("X")),
      k.lift_M(k.eta("X"), "X", "IX"));
  law("sigma-zeta", "IX", C(k.lift_I(k.zeta("X"), "X", "MX"), k.sigma("X")),
      k.zeta("IX"));
  law("sigma-mu", "IIMX", C(k.mu("MX"), k.sigma("X")),
      C(C(k.lift_I(k.sigma("X"), "IMX", "MIX"), k.sigma("IX")),
        k.lift_M(k.mu("X"), "IIX", "IX")));
  law("sigma-nu", "IMMX", C(k.lift_I(k.nu("X"), "MMX", "MX"), k.sigma("X")),
      C(C(k.sigma("MX"), k.lift_M(k.sigma("X"), "IMX", "MIX")), k.nu("IX")));
  law("T-unit-left", "MIX", C(k.eta_T("MIX"), k.mu_T("X")), nullptr);
  law("T-unit-right", "MIX", C(k.lift_T(k.eta_T("X"), "X", "MIX"), k.mu_T("X")),
      nullptr);
  law("T-assoc", "MIMIMIX", C(k.mu_T("MIX"), k.mu_T("X")),
      C(k.lift_T(k.mu_T("X"), "MIMIX", "MIX"), k.mu_T("X")));
  return r;
}

// ---- the I-algebra --------------------------------------------------------------

namespace {

class IAlgebra : public Morphism {
 public:
  IAlgebra(std::shared_ptr<const InflatedStructure> I, UnitWitnesses w, Budget b)
      : I_(std::move(I)), w_(std::move(w)), b_(b) {}
  std::string label() const override { return "alpha(" + I_->base().label() + ")"; }
  int map0(int x) const override { return x; }
  int map1(int u) const override {
    return I_->is_eps(u) ? w_.unit1.at(u) : I_->lower1(u);
  }
  Cell map2(const Cell& c) const override {
    auto it = memo_.find(c);
    if (it != memo_.end()) return it->second;
    const Structure& X = I_->base();
    auto win = squeeze(c.in), wout = squeeze(c.out);
    std::optional<Cell> res;
    if (!I_->is_formal(c)) res = I_->core(c);
    if (win) res = res ? merge(X, *win, 1, (int)win->out.size(), *res, 1,
                               (int)win->out.size())
                       : *win;
    if (wout) {
      Cell inv = invert2(X, *wout, b_);
      int m = (int)wout->out.size();
      res = res ? merge(X, *res, 1, m, inv, 1, m) : inv;
    }
    if (!res) {
      Word g = map_word(c.in);
      auto u = find_seq_unit(X, g, b_);
      if (!u) throw NoSolution("no unit on " + show_word(X, g));
      res = *u;
    }
    return memo_[c] = *res;
  }

 private:
  // (alpha d) -> (collapse d), or -> (1_x) when d is all eps; nullopt when
  // nothing is to be removed
  std::optional<Cell> squeeze(const Word& d) const {
    auto it = squeeze_.find(d);
    if (it != squeeze_.end()) return it->second;
    const Structure& X = I_->base();
    Word cur = map_word(d);
    std::vector<bool> e;
    for (int u : d) e.push_back(I_->is_eps(u));
    std::optional<Cell> acc;
    for (;;) {
      size_t k = 0;
      while (k < cur.size() && !e[k]) ++k;
      if (k == cur.size() || cur.size() == 1) break;
      Cell step;
      int pos;
      if (k + 1 < cur.size()) {
        step = w_.left.at(cur[k + 1]);
        pos = (int)k + 1;
      } else {
        step = w_.right.at(cur[k - 1]);
        pos = (int)k;
      }
      if (!acc) {
        if (cur.size() == 2) {
          acc = step;
        } else {
          auto u = find_seq_unit(X, cur, b_);
          if (!u) throw NoSolution("no unit on " + show_word(X, cur));
          acc = merge(X, *u, pos, pos + 1, step, 1, 2);
        }
      } else {
        acc = merge(X, *acc, pos, pos + 1, step, 1, 2);
      }
      cur.erase(cur.begin() + k);
      e.erase(e.begin() + k);
    }
    return squeeze_[d] = acc;
  }

  std::shared_ptr<const InflatedStructure> I_;
  UnitWitnesses w_;
  Budget b_;
  mutable std::map<Cell, Cell> memo_;
  mutable std::map<Word, std::optional<Cell>> squeeze_;
};

}  // namespace

MPtr i_algebra_from_choices(const std::shared_ptr<const InflatedStructure>& IX,
                            const UnitWitnesses& w, const Budget& b) {
  for (int x = 0; x < IX->num0(); ++x)
    if (!w.unit1.count(x)) throw NoSolution("missing unit 1-cell");
  return std::make_shared<IAlgebra>(IX, w, b);
}

namespace {

void check_strength(Report& r, const std::string& name, const Morphism& f,
                    const Structure& X, const Structure& Y, const Budget& b) {
  Report m = check_morphism(f, X, Y, b);
  for (auto& fd : m.findings)
    if (r.findings.size() < 20) r.findings.push_back(fd);
  std::string v = m.ok() ? "holds" : "fails";
  for (const auto& [k, val] : m.info) v += " " + k + "=" + val;
  r.set(name, v);
}

}  // namespace

Report check_i_algebra(const MonadKit& kit, const MPtr& alpha, const Budget& b,
                       size_t sample) {
  Report r;
  r.title = "I-algebra " + alpha->label();
  r.budget = b;
  check_strength(r, "morphism", *alpha, *kit.get("IX"), *kit.get("X"), b);
  check_law(r, "unit-law", *kit.get("X"), compose_morphisms(kit.eta("X"), alpha),
            nullptr, b, sample);
  check_law(r, "multiplication-law", *kit.get("IIX"),
            compose_morphisms(kit.lift_I(alpha, "IX", "X"), alpha),
            compose_morphisms(kit.mu("X"), alpha), b, sample);
  return r;
}

TAlgebraData t_algebra_on_merge(std::shared_ptr<MonadKit> kit, MPtr alpha) {
  TAlgebraData A;
  MPtr ms = kit->lift_M(kit->sigma("X"), "IMX", "MIX");
  MPtr ma = kit->lift_M(alpha, "IX", "X");
  A.beta = compose_morphisms(compose_morphisms(ms, kit->nu("IX")), ma);
  A.carrier = kit->merged("MX");
  A.domain = kit->get("MIMX");
  A.kit = std::move(kit);
  return A;
}

Report check_t_algebra(const TAlgebraData& A, const Budget& b, size_t sample,
                       bool strength) {
  Report r;
  r.title = "T-algebra on " + A.carrier->label();
  r.budget = b;
  const MonadKit& k = *A.kit;
  if (strength) check_strength(r, "morphism", *A.beta, *A.domain, *A.carrier, b);
  check_law(r, "unit-law", *A.carrier, compose_morphisms(k.eta_T("MX"), A.beta),
            nullptr, b, sample);
  check_law(r, "multiplication-law", *k.get("MIMIMX"),
            compose_morphisms(k.lift_T(A.beta, "MIMX", "MX"), A.beta),
            compose_morphisms(k.mu_T("MX"), A.beta), b, sample);
  return r;
}

// ---- semi-strictification -------------------------------------------------------

namespace {

// M(X) -> X: <G> goes to the left-comb tensor c_G, cells are conjugated by
// the comb witnesses t_G
class Fold : public Morphism {
 public:
  Fold(std::shared_ptr<const MergedStructure> Y, ExtractChoices ch, Budget b)
      : Y_(std::move(Y)), ch_(std::move(ch)), b_(b) {}
  std::string label() const override { return "fold(" + Y_->label() + ")"; }
  int map0(int x) const override { return x; }
  int map1(int u) const override { return comb(Y_->seq(u)); }
  Cell map2(const Cell& q) const override {
    auto it = memo_.find(q);
    if (it != memo_.end()) return it->second;
    const Structure& X = Y_->base();
    Cell cur = Y_->flat(q);
    int pos = 1;
    for (int u : q.in) {
      const Word& g = Y_->seq(u);
      int n = (int)g.size();
      if (n > 1) cur = merge(X, from(g), 1, n, cur, pos, pos + n - 1);
      ++pos;
    }
    pos = 1;
    for (int u : q.out) {
      const Word& g = Y_->seq(u);
      int n = (int)g.size();
      if (n > 1) cur = merge(X, cur, pos, pos + n - 1, to(g), 1, n);
      ++pos;
    }
    return memo_[q] = cur;
  }

  int comb(const Word& g) const { return g.size() == 1 ? g[0] : to(g).out[0]; }
  // (G) -> (c_G) for |G| > 1
  const Cell& to(const Word& g) const {
    auto it = to_.find(g);
    if (it != to_.end()) return it->second;
    const Structure& X = Y_->base();
    Word init(g.begin(), g.end() - 1);
    const Cell& t = ch_.tensor.at({comb(init), g.back()});
    Cell c = init.size() == 1 ? t : cut(X, to(init), 1, t, 1);
    return to_[g] = c;
  }
  const Cell& from(const Word& g) const {
    auto it = from_.find(g);
    if (it != from_.end()) return it->second;
    return from_[g] = invert2(Y_->base(), to(g), b_);
  }

 private:
  std::shared_ptr<const MergedStructure> Y_;
  ExtractChoices ch_;
  Budget b_;
  mutable std::map<Cell, Cell> memo_;
  mutable std::map<Word, Cell> to_, from_;
};

}  // namespace

Strictified semi_strictify(const SPtr& X, const ExtractChoices& ch,
                           const Budget& b) {
  Strictified S;
  auto kit = std::make_shared<MonadKit>(X, b.max_seq);
  MPtr alpha = i_algebra_from_choices(kit->inflated("IX"), ch.w, b);
  S.beta = t_algebra_on_merge(kit, alpha);
  auto Y = S.beta.carrier;
  S.zeta = kit->zeta("X");
  auto fold = std::make_shared<Fold>(Y, ch, b);
  S.fold = fold;

  Transfor eps;
  eps.label = "eps(" + Y->label() + ")";
  for (int x = 0; x < X->num0(); ++x) eps.comp0.push_back(Y->id({ch.w.unit1.at(x)}));
  for (int u = 0; u < Y->num1(); ++u) {
    const Word& g = Y->seq(u);
    int n = (int)g.size();
    int x = Y->src(u), y = Y->tgt(u);
    // r_G : (G, 1y) -> (G)
    Cell core = ch.w.right.at(g.back());
    if (n > 1) {
      auto unit = find_seq_unit(*X, g, b);
      if (!unit) throw NoSolution("no unit on " + show_word(*X, g));
      core = merge(*X, core, 1, 1, *unit, n, n);
      core = merge(*X, core, 1, n, fold->to(g), 1, n);
    }
    int c = fold->comb(g);
    core = merge(*X, core, 1, 1, invert2(*X, ch.w.left.at(c), b), 1, 1);
    eps.comp1[u] = Y->group(core, {u, Y->id({ch.w.unit1.at(y)})},
                            {Y->id({ch.w.unit1.at(x)}), Y->id({c})});
  }

  S.E.f = S.zeta;
  S.E.g = fold;
  S.E.eta = identity_transfor(*X, *X, compose_morphisms(S.zeta, fold), ch.w, b);
  S.E.eps = std::move(eps);
  return S;
}

Report verify_strict_associativity(const TAlgebraData& A, const Budget& b) {
  Report r;
  const MergedStructure& Y = *A.carrier;
  r.title = "strict associativity of " + Y.label();
  r.budget = b;
  auto IY = A.kit->inflated("IMX");
  auto TY = A.kit->merged("MIMX");
  const Morphism& beta = *A.beta;
  auto l = [&](int a) { return IY->lift1(a); };
  auto tensor = [&](int a, int c) { return beta.map1(TY->id({l(a), l(c)})); };
  auto unit1 = [&](int x) { return beta.map1(TY->id({IY->eps(x)})); };
  // the image of a formal unit with blocks din -> dout of the decorated
  // boundaries in -> out
  auto image = [&](const Word& in, const Word& out, const std::vector<int>& din,
                   const std::vector<int>& dout) {
    Cell f = IY->formal(in, out);
    return beta.map2(TY->group(f, TY->blocks(in, din), TY->blocks(out, dout)));
  };
  auto twit = [&](int a, int c) {
    return image({l(a), l(c)}, {l(a), l(c)}, {1, 1}, {2});
  };

  size_t triples = 0, literal = 0, units = 0;
  for (int a = 0; a < Y.num1(); ++a)
    for (int c = 0; c < Y.num1(); ++c) {
      if (Y.tgt(a) != Y.src(c)) continue;
      for (int d = 0; d < Y.num1(); ++d) {
        if (Y.tgt(c) != Y.src(d)) continue;
        if (Y.weight1(a) + Y.weight1(c) + Y.weight1(d) > b.max_seq) continue;
        ++triples;
        Fields at{{"a", Y.name1(a)}, {"b", Y.name1(c)}, {"c", Y.name1(d)}};
        int ac = tensor(a, c), cd = tensor(c, d);
        int lhs = tensor(ac, d), rhs = tensor(a, cd);
        if (lhs != rhs) {
          Fields f = at;
          f.push_back({"left", Y.name1(lhs)});
          f.push_back({"right", Y.name1(rhs)});
          r.add("tensor-not-strict", f);
          continue;
        }
        ++literal;
        Cell t3 = cut(Y, twit(a, c), 1, twit(ac, d), 1);
        Cell s = cut(Y, twit(c, d), 1, twit(a, cd), 2);
        Cell assoc = divide(Y, t3, Side::output, 1, s, 1);
        Cell formal = image({l(a), l(c), l(d)}, {l(a), l(c), l(d)}, {3}, {3});
        if (assoc != formal) {
          Fields f = at;
          f.push_back({"associator", show(Y, assoc)});
          f.push_back({"image", show(Y, formal)});
          r.add("associator-not-image", f);
        }
        auto u = find_unit2(Y, lhs, b);
        if (!u || *u != assoc) {
          Fields f = at;
          f.push_back({"associator", show(Y, assoc)});
          r.add("associator-not-unit", f);
        } else {
          ++units;
        }
      }
    }

  size_t unitors = 0, nonunit = 0;
  for (int a = 0; a < Y.num1(); ++a) {
    if (Y.weight1(a) + 1 > b.max_seq) continue;
    int x = Y.src(a), y = Y.tgt(a);
    int ux = unit1(x), uy = unit1(y);
    Cell lw = image({IY->eps(x), l(a)}, {l(a)}, {1, 1}, {1});
    Cell rw = image({l(a), IY->eps(y)}, {l(a)}, {1, 1}, {1});
    Cell lam = divide(Y, twit(ux, a), Side::output, 1, lw, 1);
    Cell rho = divide(Y, twit(a, uy), Side::output, 1, rw, 1);
    for (const Cell& p : {lam, rho}) {
      ++unitors;
      bool unit = p.in == p.out && find_unit2(Y, p.in[0], b) == p;
      if (!unit) ++nonunit;
    }
  }

  r.set("triples", std::to_string(triples));
  r.set("literal-equalities", std::to_string(literal));
  r.set("unit-associators", std::to_string(units));
  r.set("unitors", std::to_string(unitors));
  r.set("non-unit-unitors", std::to_string(nonunit));
  r.set("strict associativity", r.ok() ? "certified" : "fails");
  return r;
}

Report strictify_report(const SPtr& X, const Budget& b) {
  ExtractChoices ch = default_choices(*X, b);
  Strictified S = semi_strictify(X, ch, b);
  Report r = verify_strict_associativity(S.beta, b);
  r.title = "strictify " + X->label();
  Certificate e = verify_equivalence(S.E, X, S.beta.carrier, b);
  r.set("equivalence", verdict(e));
  if (!e.holds) r.add("equivalence-fails", {{"detail", e.counterexample.value_or("")}});
  return r;
}

}  // namespace pw
