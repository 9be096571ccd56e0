#include "polyweave/polybicat.hpp"

#include <algorithm>
#include <set>

namespace pw {

std::string side_mark(Side s, int k1, int k2) {
  std::string r = "d";
  r += k1 == k2 ? std::to_string(k1)
                : "[" + std::to_string(k1) + "," + std::to_string(k2) + "]";
  return r + (s == Side::input ? "-" : "+");
}

// ---- divisibility ----------------------------------------------------------

namespace {

// words ending at y (or starting at x), plus the empty word
std::vector<Word> flanks(const Structure& X, int x, int y, int maxlen,
                         int maxw) {
  std::vector<Word> r{Word{}};
  if (maxlen <= 0 || maxw <= 0) return r;
  const auto& ws = X.words(x, y, maxlen, maxw);
  r.insert(r.end(), ws.begin(), ws.end());
  return r;
}

int out_cap(const Structure& X, const Budget& b) {
  return X.single_output() ? 1 : b.max_out;
}

}  // namespace

std::vector<Equation> equations(const Structure& X, const Cell& t, Side side,
                                int k1, int k2, const Budget& b) {
  std::vector<Equation> res;
  int len = k2 - k1 + 1;
  if (!X.has_merges() && len > 1) return res;
  int n = (int)t.in.size(), m = (int)t.out.size();
  if (side == Side::output) {
    if (k1 < 1 || k2 > m || k1 > k2) return res;
    Word mid = slice(t.out, k1, k2);
    int room = b.max_in - len, wroom = b.max_seq - X.weight(mid);
    for (const Word& L : flanks(X, -1, word_src(X, mid), room, wroom))
      for (const Word& R : flanks(X, word_tgt(X, mid), -1, room - (int)L.size(),
                                  wroom - X.weight(L))) {
        Word xin = cat(L, mid, R);
        int i1 = (int)L.size() + 1, i2 = (int)L.size() + len;
        if (!legal_sides(k1, k2, m, i1, i2, (int)xin.size())) continue;
        Word rin = cat(L, t.in, R);
        for (const Word& xout : X.words(word_src(X, xin), word_tgt(X, xin),
                                        out_cap(X, b), b.max_seq)) {
          Word rout = cat(slice(t.out, 1, k1 - 1), xout, slice(t.out, k2 + 1, m));
          if (X.single_output() && rout.size() != 1) continue;
          if (!within(b, X, rin, rout)) continue;
          res.push_back({xin, xout, i1});
        }
      }
  } else {
    if (k1 < 1 || k2 > n || k1 > k2) return res;
    Word mid = slice(t.in, k1, k2);
    int room = out_cap(X, b) - len, wroom = b.max_seq - X.weight(mid);
    for (const Word& L : flanks(X, -1, word_src(X, mid), room, wroom))
      for (const Word& R : flanks(X, word_tgt(X, mid), -1, room - (int)L.size(),
                                  wroom - X.weight(L))) {
        Word xout = cat(L, mid, R);
        int j1 = (int)L.size() + 1, j2 = (int)L.size() + len;
        if (!legal_sides(j1, j2, (int)xout.size(), k1, k2, n)) continue;
        Word rout = cat(L, t.out, R);
        if (X.single_output() && rout.size() != 1) continue;
        for (const Word& xin : X.words(word_src(X, xout), word_tgt(X, xout),
                                       b.max_in, b.max_seq)) {
          Word rin = cat(slice(t.in, 1, k1 - 1), xin, slice(t.in, k2 + 1, n));
          if (!within(b, X, rin, rout)) continue;
          res.push_back({xin, xout, j1});
        }
      }
  }
  return res;
}

Cell glue(const Structure& X, const Cell& t, Side side, int k1, int k2,
          const Cell& x, int at) {
  int len = k2 - k1;
  if (side == Side::output) return merge(X, t, k1, k2, x, at, at + len);
  return merge(X, x, at, at + len, t, k1, k2);
}

namespace {

// the verdict, and optionally the full certificate
bool divisibility(const Structure& X, const Cell& t, Side side, int k1, int k2,
                  const Budget& b, Certificate* cert) {
  bool ok = true;
  for (const Equation& e : equations(X, t, side, k1, k2, b)) {
    Word sin, sout;
    Cell probe{e.xin, e.xout, 0};
    if (side == Side::output)
      merge_boundary(t, k1, k2, probe, e.at, e.at + k2 - k1, sin, sout);
    else
      merge_boundary(probe, e.at, e.at + k2 - k1, t, k1, k2, sin, sout);
    uint32_t ns = X.hom_size(sin, sout);
    uint32_t nx = X.hom_size(e.xin, e.xout);
    std::map<uint32_t, uint32_t> hit;  // s tag -> x tag
    std::string bad;
    for (uint32_t k = 0; k < nx && bad.empty(); ++k) {
      Cell x{e.xin, e.xout, k};
      Cell r = glue(X, t, side, k1, k2, x, e.at);
      if (r.tag >= ns)
        bad = "composite " + show(X, r) + " is not a cell";
      else if (!hit.emplace(r.tag, k).second)
        bad = "two solutions for " + show(X, r);
    }
    if (bad.empty() && hit.size() != ns) {
      for (uint32_t k = 0; k < ns; ++k)
        if (!hit.count(k)) {
          bad = "no solution for " + show(X, Cell{sin, sout, k});
          break;
        }
    }
    if (cert) {
      cert->instances += ns;
      if (bad.empty())
        for (auto [st, xt] : hit)
          cert->witnesses.push_back(
              {show(X, Cell{sin, sout, st}) + "@" + std::to_string(e.at),
               show(X, Cell{e.xin, e.xout, xt})});
    }
    if (!bad.empty()) {
      ok = false;
      if (!cert) return false;
      cert->fail(bad + " (x:" + show_word(X, e.xin) + "->" +
                 show_word(X, e.xout) + " at " + std::to_string(e.at) + ")");
      return false;
    }
  }
  return ok;
}

}  // namespace

Certificate is_divisible_at(const Structure& X, const Cell& t, Side side,
                            int k1, int k2, const Budget& b) {
  Certificate c;
  c.property = "divisible-at-" + side_mark(side, k1, k2);
  c.subject = show(X, t);
  c.budget = b;
  bool ok = divisibility(X, t, side, k1, k2, b, &c);
  X.div_memo[{t, side == Side::input ? 0 : 1, k1, k2, b}] = ok;
  return c;
}

bool divisible(const Structure& X, const Cell& t, Side side, int k1, int k2,
               const Budget& b) {
  Structure::DivKey key{t, side == Side::input ? 0 : 1, k1, k2, b};
  auto it = X.div_memo.find(key);
  if (it != X.div_memo.end()) return it->second;
  bool ok = divisibility(X, t, side, k1, k2, b, nullptr);
  X.div_memo[key] = ok;
  return ok;
}

Cell divide(const Structure& X, const Cell& t, Side side, int k1, int k2,
            const Cell& s, int at) {
  int n = (int)t.in.size(), m = (int)t.out.size(), len = k2 - k1 + 1;
  Word xin, xout;
  if (side == Side::output) {
    int ni = (int)s.in.size(), no = (int)s.out.size();
    if (at < 1 || at + n - 1 > ni || slice(s.in, at, at + n - 1) != t.in ||
        no < m - len || slice(s.out, 1, k1 - 1) != slice(t.out, 1, k1 - 1) ||
        slice(s.out, no - (m - k2) + 1, no) != slice(t.out, k2 + 1, m))
      throw IllegalMerge("equation is not well formed");
    xin = cat(slice(s.in, 1, at - 1), slice(t.out, k1, k2),
              slice(s.in, at + n, ni));
    xout = slice(s.out, k1, no - (m - k2));
  } else {
    int ni = (int)s.in.size(), no = (int)s.out.size();
    if (at < 1 || at + m - 1 > no || slice(s.out, at, at + m - 1) != t.out ||
        ni < n - len || slice(s.in, 1, k1 - 1) != slice(t.in, 1, k1 - 1) ||
        slice(s.in, ni - (n - k2) + 1, ni) != slice(t.in, k2 + 1, n))
      throw IllegalMerge("equation is not well formed");
    xout = cat(slice(s.out, 1, at - 1), slice(t.in, k1, k2),
               slice(s.out, at + m, no));
    xin = slice(s.in, k1, ni - (n - k2));
  }
  if (xin.empty() || xout.empty() || !parallel(X, xin, xout))
    throw NoSolution("no cell fits the equation");
  std::optional<Cell> found;
  uint32_t nx = X.hom_size(xin, xout);
  for (uint32_t k = 0; k < nx; ++k) {
    Cell x{xin, xout, k};
    if (glue(X, t, side, k1, k2, x, at) == s) {
      if (found)
        throw NonUniqueSolution("two solutions dividing " + show(X, s) +
                                " by " + show(X, t));
      found = x;
    }
  }
  if (!found)
    throw NoSolution("no solution dividing " + show(X, s) + " by " +
                     show(X, t));
  return *found;
}

// ---- 2-units ---------------------------------------------------------------

Certificate is_unit2(const Structure& X, const Cell& p, const Budget& b) {
  Certificate c;
  c.property = "unit";
  c.subject = show(X, p);
  c.budget = b;
  if (p.in.size() != 1 || p.in != p.out) {
    c.fail("not of shape (a)->(a)");
    return c;
  }
  int a = p.in[0];
  for (const Cell& q : cells_within(X, b)) {
    for (size_t j = 0; j < q.out.size(); ++j)
      if (q.out[j] == a) {
        ++c.instances;
        if (cut(X, q, (int)j + 1, p, 1) != q)
          c.fail("cut(" + show(X, q) + "," + std::to_string(j + 1) + ",p,1)");
      }
    for (size_t i = 0; i < q.in.size(); ++i)
      if (q.in[i] == a) {
        ++c.instances;
        if (cut(X, p, 1, q, (int)i + 1) != q)
          c.fail("cut(p,1," + show(X, q) + "," + std::to_string(i + 1) + ")");
      }
    if (!c.holds) break;
  }
  return c;
}

std::optional<Cell> find_unit2(const Structure& X, int a, const Budget& b) {
  std::string key = "unit2/" + std::to_string(a) + "/" + b.str();
  auto it = X.cell_memo.find(key);
  if (it != X.cell_memo.end()) {
    if (it->second.empty()) return std::nullopt;
    return it->second[0];
  }
  std::optional<Cell> r;
  for (const Cell& p : hom(X, {a}, {a}))
    if (is_unit2(X, p, b).holds) {
      r = p;
      break;
    }
  X.cell_memo[key] = r ? std::vector<Cell>{*r} : std::vector<Cell>{};
  return r;
}

std::pair<Cell, Cell> unit2_from_divisible(const Structure& X, const Cell& p) {
  if (p.in.size() != 1 || p.out.size() != 1)
    throw IllegalMerge("not of shape (a)->(a')");
  return {divide(X, p, Side::input, 1, p, 1),
          divide(X, p, Side::output, 1, p, 1)};
}

Cell inverse2(const Structure& X, const Cell& p, const Budget& b) {
  if (p.in.size() != 1 || p.out.size() != 1)
    throw IllegalMerge("not of shape (a)->(a')");
  if (divisible(X, p, Side::output, 1, b)) {
    auto u = find_unit2(X, p.in[0], b);
    if (!u) throw NotDivisible("no unit on the source");
    return divide(X, p, Side::output, 1, *u, 1);
  }
  if (divisible(X, p, Side::input, 1, b)) {
    auto u = find_unit2(X, p.out[0], b);
    if (!u) throw NotDivisible("no unit on the target");
    return divide(X, p, Side::input, 1, *u, 1);
  }
  throw NotDivisible(show(X, p) + " is not divisible");
}

// ---- representing cells ----------------------------------------------------

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::tensor: return "tensor";
    case Kind::par: return "par";
    case Kind::rhom: return "rhom";
    case Kind::lhom: return "lhom";
    case Kind::rcohom: return "rcohom";
    case Kind::lcohom: return "lcohom";
  }
  return "?";
}

std::optional<Representing> search_representing(const Structure& X, Kind k,
                                                int a, int b,
                                                const Budget& bud) {
  // endpoints of the representing 1-cell c
  int cs, ct;
  switch (k) {
    case Kind::tensor:
    case Kind::par:
      if (X.tgt(a) != X.src(b)) return std::nullopt;
      cs = X.src(a), ct = X.tgt(b);
      break;
    case Kind::rhom:
    case Kind::rcohom:
      if (X.src(a) != X.src(b)) return std::nullopt;
      cs = X.tgt(a), ct = X.tgt(b);
      break;
    default:
      if (X.tgt(a) != X.tgt(b)) return std::nullopt;
      cs = X.src(b), ct = X.src(a);
      break;
  }
  for (int c = 0; c < X.num1(); ++c) {
    if (X.src(c) != cs || X.tgt(c) != ct) continue;
    Word in, out;
    Side side;
    int pos;
    switch (k) {
      case Kind::tensor: in = {a, b}, out = {c}, side = Side::output, pos = 1; break;
      case Kind::par: in = {c}, out = {a, b}, side = Side::input, pos = 1; break;
      case Kind::rhom: in = {a, c}, out = {b}, side = Side::input, pos = 2; break;
      case Kind::lhom: in = {c, a}, out = {b}, side = Side::input, pos = 1; break;
      case Kind::rcohom: in = {b}, out = {a, c}, side = Side::output, pos = 2; break;
      default: in = {b}, out = {c, a}, side = Side::output, pos = 1; break;
    }
    for (const Cell& e : hom(X, in, out)) {
      if (!divisible(X, e, side, pos, bud)) continue;
      return Representing{c, e, is_divisible_at(X, e, side, pos, bud)};
    }
  }
  return std::nullopt;
}

// ---- 1-cells ---------------------------------------------------------------

namespace {

std::optional<Cell> doubly(const Structure& X, const Word& in, const Word& out,
                           Side s1, int p1, Side s2, int p2, const Budget& b) {
  for (const Cell& c : hom(X, in, out))
    if (divisible(X, c, s1, p1, b) && divisible(X, c, s2, p2, b)) return c;
  return std::nullopt;
}

}  // namespace

std::optional<Cell> find_left_unitor(const Structure& X, int u, int a,
                                     const Budget& b) {
  return doubly(X, {u, a}, {a}, Side::output, 1, Side::input, 2, b);
}

std::optional<Cell> find_right_unitor(const Structure& X, int u, int a,
                                      const Budget& b) {
  return doubly(X, {a, u}, {a}, Side::output, 1, Side::input, 1, b);
}

Certificate is_tensor_unit1(const Structure& X, int u, const Budget& b) {
  Certificate c;
  c.property = "tensor-unit";
  c.subject = X.name1(u);
  c.budget = b;
  if (X.src(u) != X.tgt(u)) {
    c.fail("not an endo-1-cell");
    return c;
  }
  int x = X.src(u);
  for (int a = 0; a < X.num1(); ++a) {
    if (X.src(a) == x) {
      ++c.instances;
      auto l = find_left_unitor(X, u, a, b);
      if (!l) c.fail("no left unitor for " + X.name1(a));
      else c.witnesses.push_back({"l_" + X.name1(a), show(X, *l)});
    }
    if (X.tgt(a) == x) {
      ++c.instances;
      auto r = find_right_unitor(X, u, a, b);
      if (!r) c.fail("no right unitor for " + X.name1(a));
      else c.witnesses.push_back({"r_" + X.name1(a), show(X, *r)});
    }
  }
  return c;
}

Certificate is_divisible1(const Structure& X, int e, Divis kind,
                          const Budget& b) {
  if (kind == Divis::par)
    throw Error("par divisibility needs a shared structure handle");
  Certificate c;
  c.property = "tensor-divisible";
  c.subject = X.name1(e);
  c.budget = b;
  int x = X.src(e), x2 = X.tgt(e);
  auto exists = [&](const std::string& what, int from, int to,
                    auto make_in, Side s2, int p2, int target) {
    ++c.instances;
    for (int d = 0; d < X.num1(); ++d) {
      if (X.src(d) != from || X.tgt(d) != to) continue;
      Word in = make_in(d);
      Word out = target < 0 ? Word{d} : Word{target};
      auto r = doubly(X, in, out, Side::output, 1, s2, p2, b);
      if (r) {
        c.witnesses.push_back({what, show(X, *r)});
        return;
      }
    }
    c.fail("no " + what);
  };
  for (int a = 0; a < X.num1(); ++a) {
    // left divisibility
    if (X.src(a) == x)
      exists("right hom from " + X.name1(e) + " to " + X.name1(a), x2,
             X.tgt(a), [&](int d) { return Word{e, d}; }, Side::input, 2, a);
    if (X.src(a) == x2)
      exists("tensor " + X.name1(e) + "*" + X.name1(a), x, X.tgt(a),
             [&](int) { return Word{e, a}; }, Side::input, 2, -1);
    // right divisibility
    if (X.tgt(a) == x2)
      exists("left hom from " + X.name1(e) + " to " + X.name1(a), X.src(a), x,
             [&](int d) { return Word{d, e}; }, Side::input, 1, a);
    if (X.tgt(a) == x)
      exists("tensor " + X.name1(a) + "*" + X.name1(e), X.src(a), x2,
             [&](int) { return Word{a, e}; }, Side::input, 1, -1);
    if (!c.holds) break;
  }
  return c;
}

Certificate is_divisible1(const SPtr& X, int e, Divis kind, const Budget& b) {
  if (kind == Divis::tensor) return is_divisible1(*X, e, kind, b);
  Certificate c = is_divisible1(*make_co(X), e, Divis::tensor, b);
  c.property = "par-divisible";
  return c;
}

std::pair<int, int> unit1_from_divisible1(const Structure& X, int e,
                                          const Budget& b) {
  int x2 = X.tgt(e);
  int left = -1, right = -1;
  for (int d = 0; d < X.num1() && left < 0; ++d)
    if (X.src(d) == x2 && X.tgt(d) == x2 &&
        doubly(X, {e, d}, {e}, Side::output, 1, Side::input, 2, b))
      left = d;
  int x = X.src(e);
  for (int d = 0; d < X.num1() && right < 0; ++d)
    if (X.src(d) == x && X.tgt(d) == x &&
        doubly(X, {d, e}, {e}, Side::output, 1, Side::input, 1, b))
      right = d;
  if (left < 0 || right < 0)
    throw NoSolution(X.name1(e) + " has no self-division");
  return {left, right};
}

// ---- witnesses of unitality ------------------------------------------------

std::optional<UnitWitnesses> find_unit_witnesses(const Structure& X,
                                                 const Budget& b) {
  UnitWitnesses w;
  for (int x = 0; x < X.num0(); ++x) {
    for (int u = 0; u < X.num1(); ++u)
      if (X.src(u) == x && X.tgt(u) == x && is_tensor_unit1(X, u, b).holds) {
        w.unit1[x] = u;
        break;
      }
    if (!w.unit1.count(x)) return std::nullopt;
  }
  for (int a = 0; a < X.num1(); ++a) {
    auto l = find_left_unitor(X, w.unit1[X.src(a)], a, b);
    auto r = find_right_unitor(X, w.unit1[X.tgt(a)], a, b);
    if (!l || !r) return std::nullopt;
    w.left[a] = *l;
    w.right[a] = *r;
  }
  return w;
}

Report check_witness_coherence(const Structure& X, const UnitWitnesses& w,
                               const Budget& b) {
  Report r;
  r.title = "witness coherence";
  r.budget = b;
  size_t nat = 0, nat2 = 0, tri = 0;
  auto compare = [&](const char* eq, const Cell& p, auto lhs_fn, auto rhs_fn,
                     size_t& count) {
    Cell lhs, rhs;
    try {
      lhs = lhs_fn();
      rhs = rhs_fn();
    } catch (const BudgetExceeded&) {
      return;
    }
    if (!within(b, X, lhs)) return;
    ++count;
    if (lhs != rhs)
      r.add("coherence", {{"equation", eq}, {"cell", show(X, p)},
                          {"lhs", show(X, lhs)}, {"rhs", show(X, rhs)}});
  };
  for (const Cell& p : cells_within(X, b)) {
    int n = (int)p.in.size(), m = (int)p.out.size();
    compare("natural", p,
            [&] { return cut(X, p, 1, w.left.at(p.out[0]), 2); },
            [&] { return cut(X, w.left.at(p.in[0]), 1, p, 1); }, nat);
    compare("natural2", p,
            [&] { return cut(X, p, m, w.right.at(p.out[m - 1]), 1); },
            [&] { return cut(X, w.right.at(p.in[n - 1]), 1, p, n); }, nat2);
    for (int k = 1; k < n; ++k)
      compare("triangle", p,
              [&] { return cut(X, w.right.at(p.in[k - 1]), 1, p, k); },
              [&] { return cut(X, w.left.at(p.in[k]), 1, p, k + 1); }, tri);
  }
  r.set("natural-instances", std::to_string(nat));
  r.set("natural2-instances", std::to_string(nat2));
  r.set("triangle-instances", std::to_string(tri));
  return r;
}

UnitWitnesses coherentize_witnesses(const Structure& X, UnitWitnesses raw,
                                    const Budget& b) {
  (void)b;
  for (auto [x, u] : raw.unit1) raw.right[u] = raw.left[u];
  UnitWitnesses out = raw;
  for (int a = 0; a < X.num1(); ++a) {
    if (!raw.left.count(a)) continue;
    const Cell& la = raw.left.at(a);
    const Cell& ra = raw.right.at(a);
    const Cell& lx = raw.left.at(raw.unit1.at(X.src(a)));
    const Cell& ly = raw.left.at(raw.unit1.at(X.tgt(a)));
    out.left[a] = divide(X, la, Side::input, 2, cut(X, lx, 1, la, 1), 1);
    out.right[a] = divide(X, ra, Side::input, 1, cut(X, ly, 1, ra, 2), 1);
  }
  out.coherent = true;
  return out;
}

// ---- morphisms -------------------------------------------------------------

Word Morphism::map_word(const Word& w) const {
  Word r;
  for (int a : w) r.push_back(map1(a));
  return r;
}

Cell FiniteMorphism::map2(const Cell& c) const {
  Cell r{map_word(c.in), map_word(c.out), 0};
  r.tag = tag_(c, r.in, r.out);
  return r;
}

MPtr identity_morphism(const Structure& X) {
  std::vector<int> m0, m1;
  for (int x = 0; x < X.num0(); ++x) m0.push_back(x);
  for (int a = 0; a < X.num1(); ++a) m1.push_back(a);
  return std::make_shared<FiniteMorphism>(
      "id(" + X.label() + ")", m0, m1,
      [](const Cell& c, const Word&, const Word&) { return c.tag; });
}


std::string gluing_name(const Structure& X, const Cell& t, int j1, int j2,
                        const Cell& s, int i1, int i2) {
  return show(X, t) + "[" + std::to_string(j1) + "," + std::to_string(j2) +
         "]" + show(X, s) + "[" + std::to_string(i1) + "," +
         std::to_string(i2) + "]";
}

Report check_morphism(const Morphism& f, const Structure& X,
                      const Structure& Y, const Budget& b) {
  Report r;
  r.title = "morphism " + f.label();
  r.budget = b;
  for (int a = 0; a < X.num1(); ++a) {
    int fa = f.map1(a);
    if (Y.src(fa) != f.map0(X.src(a)) || Y.tgt(fa) != f.map0(X.tgt(a)))
      r.add("invalid-morphism", {{"1-cell", X.name1(a)}, {"detail", "endpoints"}});
  }
  if (!r.ok()) return r;
  auto cells = cells_within(X, b);
  for (const Cell& c : cells) {
    Cell fc = f.map2(c);
    if (fc.in != f.map_word(c.in) || fc.out != f.map_word(c.out) ||
        !valid_cell(Y, fc))
      r.add("invalid-morphism", {{"cell", show(X, c)}, {"detail", "image"}});
  }
  if (!r.ok()) return r;
  size_t n = 0, skipped = 0;
  for_each_gluing(X, cells, b, [&](const Cell& t, int j1, int j2,
                                   const Cell& s, int i1, int i2) {
    Cell m;
    try {
      m = merge(X, t, j1, j2, s, i1, i2);
    } catch (const BudgetExceeded&) {
      ++skipped;
      return;
    }
    ++n;
    Cell lhs = f.map2(m);
    Cell rhs = merge(Y, f.map2(t), j1, j2, f.map2(s), i1, i2);
    if (lhs != rhs)
      r.add("invalid-morphism",
            {{"gluing", gluing_name(X, t, j1, j2, s, i1, i2)},
             {"image", show(Y, lhs)}, {"composite", show(Y, rhs)}});
  });
  r.set("gluings", std::to_string(n));
  if (skipped) r.set("skipped", std::to_string(skipped));
  return r;
}

namespace {

class CoMorphism : public Morphism {
 public:
  explicit CoMorphism(const Morphism& f) : f_(f) {}
  std::string label() const override { return "co(" + f_.label() + ")"; }
  int map0(int x) const override { return f_.map0(x); }
  int map1(int a) const override { return f_.map1(a); }
  Cell map2(const Cell& c) const override {
    Cell r = f_.map2(CoView::to_base(c));
    return CoView::to_base(r);
  }

 private:
  const Morphism& f_;
};

struct Flag {
  bool holds = true;
  size_t instances = 0;
  std::string why;
  void fail(const std::string& w) {
    if (holds) why = w;
    holds = false;
  }
  std::string str() const {
    std::string s = holds ? "holds" : "fails";
    s += " instances=" + std::to_string(instances);
    if (!holds) s += " counterexample=" + why;
    return s;
  }
};

// tensor-side flags of f
std::map<std::string, Flag> tensor_flags(const Morphism& f, const Structure& X,
                                         const Structure& Y, const Budget& b) {
  std::map<std::string, Flag> fl;
  Flag& unital = fl["unital"];
  Flag& div2 = fl["preserves-divisible-2-cells"];
  Flag& tensors = fl["preserves-tensors"];
  Flag& d1 = fl["preserves-tensor-divisibility"];
  Flag& units = fl["preserves-tensor-units"];
  Flag& rh = fl["preserves-right-homs"];
  Flag& lh = fl["preserves-left-homs"];
  for (int a = 0; a < X.num1(); ++a) {
    auto u = find_unit2(X, a, b);
    if (!u) continue;
    ++unital.instances;
    if (!is_unit2(Y, f.map2(*u), b).holds) unital.fail("unit on " + X.name1(a));
  }
  for (const Cell& c : cells_within(X, b)) {
    int n = (int)c.in.size(), m = (int)c.out.size();
    auto keep = [&](Flag& g, Side s, int k, const char* what) {
      if (!divisible(X, c, s, k, b)) return;
      ++g.instances;
      if (!divisible(Y, f.map2(c), s, k, b))
        g.fail(std::string(what) + " " + show(X, c));
    };
    if (n == 1 && m == 1) keep(div2, Side::output, 1, "divisible");
    if (n == 2 && m == 1) {
      keep(tensors, Side::output, 1, "tensor");
      keep(rh, Side::input, 2, "right hom");
      keep(lh, Side::input, 1, "left hom");
    }
  }
  for (int e = 0; e < X.num1(); ++e) {
    if (is_divisible1(X, e, Divis::tensor, b).holds) {
      ++d1.instances;
      if (!is_divisible1(Y, f.map1(e), Divis::tensor, b).holds)
        d1.fail("divisible 1-cell " + X.name1(e));
    }
    if (is_tensor_unit1(X, e, b).holds) {
      ++units.instances;
      if (!is_tensor_unit1(Y, f.map1(e), b).holds)
        units.fail("tensor unit " + X.name1(e));
    }
  }
  return fl;
}

}  // namespace

Report classify_morphism(const Morphism& f, const SPtr& X, const SPtr& Y,
                         const Budget& b) {
  Report r = check_morphism(f, *X, *Y, b);
  r.title = "classify " + f.label();
  r.set("valid", r.ok() ? "holds" : "fails");
  if (!r.ok()) return r;
  auto t = tensor_flags(f, *X, *Y, b);
  CoMorphism cf(f);
  auto p = tensor_flags(cf, *make_co(X), *make_co(Y), b);
  for (auto& [k, v] : t) r.set(k, v.str());
  auto both = [](std::initializer_list<const Flag*> fs) {
    Flag g;
    for (const Flag* h : fs) {
      g.instances += h->instances;
      if (!h->holds) g.fail(h->why);
    }
    return g;
  };
  r.set("tensor-strong", both({&t["unital"], &t["preserves-tensor-divisibility"],
                               &t["preserves-tensors"]})
                             .str());
  r.set("par-strong", both({&p["unital"], &p["preserves-tensor-divisibility"],
                            &p["preserves-tensors"]})
                          .str());
  r.set("right-closed", both({&t["unital"], &t["preserves-tensor-units"],
                              &t["preserves-right-homs"]})
                            .str());
  r.set("left-closed", both({&t["unital"], &t["preserves-tensor-units"],
                             &t["preserves-left-homs"]})
                           .str());
  return r;
}

// ---- adjunctions and representability --------------------------------------

Certificate check_linear_adjunction(const Structure& X, int a, int b, int u,
                                    int w, const Budget& bud) {
  Certificate c;
  c.property = "linear-adjunction";
  c.subject = X.name1(a) + "-|" + X.name1(b);
  c.budget = bud;
  if (X.tgt(a) != X.src(b) || X.tgt(b) != X.src(a)) {
    c.fail("1-cells are not opposite");
    return c;
  }
  for (const Cell& e : hom(X, {b, a}, {w}))
    for (int k : {1, 2}) {
      ++c.instances;
      if (divisible(X, e, Side::input, k, bud)) {
        c.witnesses.push_back({"epsilon", show(X, e)});
        c.note = "epsilon divisible at " + side_mark(Side::input, k, k);
        return c;
      }
    }
  for (const Cell& e : hom(X, {u}, {a, b}))
    for (int k : {1, 2}) {
      ++c.instances;
      if (divisible(X, e, Side::output, k, bud)) {
        c.witnesses.push_back({"eta", show(X, e)});
        c.note = "eta divisible at " + side_mark(Side::output, k, k);
        return c;
      }
    }
  c.fail("no divisible epsilon or eta");
  return c;
}

Report representability_report(const SPtr& Xp, const Budget& b) {
  const Structure& X = *Xp;
  SPtr co = make_co(Xp);
  Report r;
  r.title = "representability " + X.label();
  r.budget = b;
  auto flag = [&](const std::string& k, bool v) {
    r.set(k, v ? "holds" : "fails");
  };
  bool unital = true;
  for (int a = 0; a < X.num1(); ++a)
    if (!find_unit2(X, a, b)) unital = false;
  flag("unital", unital);

  auto units_of = [&](const Structure& S, const std::string& name) {
    bool all = true;
    for (int x = 0; x < S.num0(); ++x) {
      std::string us;
      for (int u = 0; u < S.num1(); ++u)
        if (S.src(u) == x && S.tgt(u) == x && is_tensor_unit1(S, u, b).holds)
          us += (us.empty() ? "" : ",") + S.name1(u);
      if (us.empty()) all = false;
      r.set(name + "-units(" + S.name0(x) + ")", us.empty() ? "none" : us);
    }
    return all;
  };
  bool t0 = units_of(X, "tensor");
  bool p0 = units_of(*co, "par");
  flag("tensor-0-representable", t0);
  flag("par-0-representable", p0);

  auto pairs = [&](Kind k, const std::string& name) {
    bool all = true;
    for (int a = 0; a < X.num1(); ++a)
      for (int c = 0; c < X.num1(); ++c) {
        bool ok;
        switch (k) {
          case Kind::tensor:
          case Kind::par: ok = X.tgt(a) == X.src(c); break;
          case Kind::rhom:
          case Kind::rcohom: ok = X.src(a) == X.src(c); break;
          default: ok = X.tgt(a) == X.tgt(c); break;
        }
        if (!ok) continue;
        auto rep = search_representing(X, k, a, c, b);
        std::string key = name + "(" + X.name1(a) + "," + X.name1(c) + ")";
        if (rep)
          r.set(key, X.name1(rep->cell1) + " via " + show(X, rep->cell));
        else {
          r.set(key, "none");
          all = false;
        }
      }
    return all;
  };
  bool t1 = pairs(Kind::tensor, "tensor");
  bool p1 = pairs(Kind::par, "par");
  bool rc = pairs(Kind::rhom, "rhom");
  bool lc = pairs(Kind::lhom, "lhom");
  bool rcc = pairs(Kind::rcohom, "rcohom");
  bool lcc = pairs(Kind::lcohom, "lcohom");
  flag("tensor-1-representable", unital && t1);
  flag("par-1-representable", unital && p1);
  flag("tensor-representable", unital && t0 && t1);
  flag("par-representable", unital && p0 && p1);
  flag("right-closed", unital && rc);
  flag("left-closed", unital && lc);
  flag("right-coclosed", unital && rcc);
  flag("left-coclosed", unital && lcc);
  flag("star-autonomous",
       unital && t0 && t1 && p0 && p1 && rc && lc && rcc && lcc);

  std::string td, pd;
  for (int e = 0; e < X.num1(); ++e) {
    if (is_divisible1(X, e, Divis::tensor, b).holds)
      td += (td.empty() ? "" : ",") + X.name1(e);
    if (is_divisible1(Xp, e, Divis::par, b).holds)
      pd += (pd.empty() ? "" : ",") + X.name1(e);
  }
  r.set("tensor-divisible", td.empty() ? "none" : td);
  r.set("par-divisible", pd.empty() ? "none" : pd);
  return r;
}

// ---- axiom schemes ---------------------------------------------------------

namespace {

// labels of boundary wires
int wire(int cell, int side, int pos) { return cell * 1000 + side * 100 + pos; }

}  // namespace

Report check_scheme_instances(const Structure& X, const Budget& b,
                              const std::string& title) {
  Report r;
  r.title = title;
  r.budget = b;
  auto cells = cells_within(X, b);
  if (X.thin()) {
    size_t n = 0;
    for_each_gluing(X, cells, b, [&](const Cell& t, int j1, int j2,
                                     const Cell& s, int i1, int i2) {
      ++n;
      Word rin, rout;
      merge_boundary(t, j1, j2, s, i1, i2, rin, rout);
      if (X.hom_size(rin, rout) == 0)
        r.add("closure", {{"gluing", gluing_name(X, t, j1, j2, s, i1, i2)},
                          {"result", show_word(X, rin) + "->" +
                                         show_word(X, rout)}});
    });
    r.set("mode", "thin-closure");
    r.set("gluings", std::to_string(n));
    return r;
  }
  std::map<std::string, size_t> count;
  for_each_gluing(X, cells, b, [&](const Cell& t, int j1, int j2,
                                   const Cell& s, int i1, int i2) {
    Cell m1 = merge(X, t, j1, j2, s, i1, i2);
    int m = (int)t.out.size(), p = (int)s.in.size();
    std::vector<int> lin, lout;
    for (int k = 1; k < i1; ++k) lin.push_back(wire(1, 0, k));
    for (int k = 1; k <= (int)t.in.size(); ++k) lin.push_back(wire(0, 0, k));
    for (int k = i2 + 1; k <= p; ++k) lin.push_back(wire(1, 0, k));
    for (int k = 1; k < j1; ++k) lout.push_back(wire(0, 1, k));
    for (int k = 1; k <= (int)s.out.size(); ++k) lout.push_back(wire(1, 1, k));
    for (int k = j2 + 1; k <= m; ++k) lout.push_back(wire(0, 1, k));
    Diagram base;
    base.cells = {t, s};
    for (int k = 0; k <= j2 - j1; ++k)
      base.glue.push_back({0, j1 + k, 1, i1 + k});
    auto run = [&](Diagram d, std::set<int> touched, bool below,
                   const std::string& desc) {
      std::string cls;
      if (touched.size() == 2) cls = "merge";
      else if (below) cls = touched.count(1) ? "asso" : "inter";
      else cls = touched.count(0) ? "asso" : "inter";
      ++count[cls];
      auto vals = evaluate_all(X, d, 2);
      if (vals.size() > 1)
        r.add("scheme-violation", {{"class", cls}, {"instance", desc},
                                   {"value1", show(X, vals[0])},
                                   {"value2", show(X, vals[1])}});
    };
    for (const Cell& c : cells) {
      // c below m1
      int mo = (int)m1.out.size(), ci = (int)c.in.size();
      for (int a1 = 1; a1 <= mo; ++a1)
        for (int a2 = a1; a2 <= mo; ++a2) {
          if (!X.has_merges() && a2 > a1) break;
          int len = a2 - a1;
          for (int c1 = 1; c1 + len <= ci; ++c1) {
            int c2 = c1 + len;
            if (!legal_sides(a1, a2, mo, c1, c2, ci)) continue;
            bool match = true;
            for (int k = 0; k <= len && match; ++k)
              match = m1.out[a1 - 1 + k] == c.in[c1 - 1 + k];
            if (!match) continue;
            Word rin, rout;
            merge_boundary(m1, a1, a2, c, c1, c2, rin, rout);
            if (X.single_output() && rout.size() != 1) continue;
            if (!within(b, X, rin, rout)) continue;
            Diagram d = base;
            d.cells.push_back(c);
            std::set<int> touched;
            for (int k = 0; k <= len; ++k) {
              int l = lout[a1 - 1 + k];
              touched.insert(l / 1000);
              d.glue.push_back({l / 1000, l % 100, 2, c1 + k});
            }
            run(d, touched, true,
                gluing_name(X, t, j1, j2, s, i1, i2) + " then " + show(X, c) +
                    " below [" + std::to_string(a1) + "," + std::to_string(a2) +
                    "]/[" + std::to_string(c1) + "," + std::to_string(c2) + "]");
          }
        }
      // c above m1
      int mi = (int)m1.in.size(), co = (int)c.out.size();
      for (int c1 = 1; c1 <= co; ++c1)
        for (int c2 = c1; c2 <= co; ++c2) {
          if (!X.has_merges() && c2 > c1) break;
          int len = c2 - c1;
          for (int a1 = 1; a1 + len <= mi; ++a1) {
            int a2 = a1 + len;
            if (!legal_sides(c1, c2, co, a1, a2, mi)) continue;
            bool match = true;
            for (int k = 0; k <= len && match; ++k)
              match = c.out[c1 - 1 + k] == m1.in[a1 - 1 + k];
            if (!match) continue;
            Word rin, rout;
            merge_boundary(c, c1, c2, m1, a1, a2, rin, rout);
            if (X.single_output() && rout.size() != 1) continue;
            if (!within(b, X, rin, rout)) continue;
            Diagram d = base;
            d.cells.push_back(c);
            std::set<int> touched;
            for (int k = 0; k <= len; ++k) {
              int l = lin[a1 - 1 + k];
              touched.insert(l / 1000);
              d.glue.push_back({2, c1 + k, l / 1000, l % 100});
            }
            run(d, touched, false,
                gluing_name(X, t, j1, j2, s, i1, i2) + " then " + show(X, c) +
                    " above [" + std::to_string(c1) + "," + std::to_string(c2) +
                    "]/[" + std::to_string(a1) + "," + std::to_string(a2) + "]");
          }
        }
    }
  });
  r.set("mode", "schemes");
  for (const auto& [k, v] : count) r.set(k + "-instances", std::to_string(v));
  return r;
}

Report check_cut_axioms(const Structure& X, const Budget& b) {
  if (X.has_merges()) {
    UnderlyingPoly U(std::shared_ptr<const Structure>(&X, [](auto*) {}));
    return check_scheme_instances(U, b, "cut axioms " + X.label());
  }
  return check_scheme_instances(X, b, "cut axioms " + X.label());
}

}  // namespace pw
