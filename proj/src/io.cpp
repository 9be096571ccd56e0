#include "polyweave/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "polyweave/structures.hpp"

namespace pw {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& at, const std::string& msg) {
  throw InputError("at " + (at.empty() ? std::string("/") : at) + ": " + msg);
}

const json& need(const json& j, const std::string& key, const std::string& at) {
  if (!j.is_object()) fail(at, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(at, "missing key \"" + key + "\"");
  return *it;
}

std::string text(const json& j, const std::string& at) {
  if (!j.is_string()) fail(at, "expected a string");
  return j.get<std::string>();
}

int integer(const json& j, const std::string& at) {
  if (!j.is_number_integer()) fail(at, "expected an integer");
  return j.get<int>();
}

Budget budget_of(const json& j, const std::string& at) {
  if (!j.is_array() || j.size() != 3) fail(at, "expected [max_in, max_out, max_seq]");
  Budget b{integer(j[0], at + "/0"), integer(j[1], at + "/1"),
           integer(j[2], at + "/2")};
  if (b.max_in < 1 || b.max_out < 1 || b.max_seq < 1) fail(at, "budget entries must be positive");
  return b;
}

json budget_json(const Budget& b) { return json::array({b.max_in, b.max_out, b.max_seq}); }

// 0- and 1-cells shared by every explicit kind
struct GlobeDoc {
  std::string label;
  std::vector<std::string> zero;
  std::vector<OneCell> one;
  std::map<std::string, int> zid, oid;

  Word word(const json& j, const std::string& at) const {
    if (!j.is_array() || j.empty()) fail(at, "expected a nonempty list of 1-cells");
    Word w;
    for (size_t k = 0; k < j.size(); ++k) {
      std::string n = text(j[k], at + "/" + std::to_string(k));
      auto it = oid.find(n);
      if (it == oid.end()) fail(at + "/" + std::to_string(k), "undeclared 1-cell \"" + n + "\"");
      w.push_back(it->second);
    }
    for (size_t k = 1; k < w.size(); ++k)
      if (one[w[k - 1]].tgt != one[w[k]].src) fail(at, "1-cells are not composable");
    return w;
  }
  int one_cell(const json& j, const std::string& at) const {
    auto it = oid.find(text(j, at));
    if (it == oid.end()) fail(at, "undeclared 1-cell");
    return it->second;
  }
  int zero_cell(const json& j, const std::string& at) const {
    auto it = zid.find(text(j, at));
    if (it == zid.end()) fail(at, "undeclared 0-cell");
    return it->second;
  }
};

GlobeDoc parse_globe(const json& j, const std::string& dflt) {
  GlobeDoc g;
  g.label = j.contains("label") ? text(j["label"], "/label") : dflt;
  if (j.contains("zero")) {
    const json& z = j["zero"];
    if (!z.is_array() || z.empty()) fail("/zero", "expected a nonempty list");
    for (size_t k = 0; k < z.size(); ++k) {
      std::string n = text(z[k], "/zero/" + std::to_string(k));
      if (g.zid.count(n)) fail("/zero/" + std::to_string(k), "duplicate 0-cell");
      g.zid[n] = (int)g.zero.size();
      g.zero.push_back(n);
    }
  } else {
    g.zero = {"*"};
    g.zid["*"] = 0;
  }
  const json& o = need(j, "one", "");
  if (!o.is_array()) fail("/one", "expected a list");
  for (size_t k = 0; k < o.size(); ++k) {
    std::string at = "/one/" + std::to_string(k);
    OneCell c;
    if (o[k].is_string()) {
      c.name = o[k].get<std::string>();
    } else {
      c.name = text(need(o[k], "name", at), at + "/name");
      if (o[k].contains("src")) c.src = g.zero_cell(o[k]["src"], at + "/src");
      if (o[k].contains("tgt")) c.tgt = g.zero_cell(o[k]["tgt"], at + "/tgt");
    }
    if (g.oid.count(c.name)) fail(at, "duplicate 1-cell \"" + c.name + "\"");
    g.oid[c.name] = (int)g.one.size();
    g.one.push_back(c);
  }
  return g;
}

bool flag(const json& j, const std::string& key) {
  if (!j.contains(key)) return false;
  if (!j[key].is_boolean()) fail("/" + key, "expected a boolean");
  return j[key].get<bool>();
}

std::pair<int, int> interval(const json& j, const std::string& at) {
  if (j.is_number_integer()) return {j.get<int>(), j.get<int>()};
  if (!j.is_array() || j.size() != 2) fail(at, "expected a position or [first, last]");
  return {integer(j[0], at + "/0"), integer(j[1], at + "/1")};
}

StructureDoc parse_doc(const json& j);

StructureDoc parse_ref(const json& j, const std::string& at) {
  try {
    if (j.is_string()) return load_input(j.get<std::string>());
    if (j.is_object()) return parse_doc(j);
  } catch (const InputError& e) {
    fail(at, e.what());
  }
  fail(at, "expected an input name or an inline document");
}

SPtr parse_thin(const json& j, bool merges, StructureDoc& d) {
  GlobeDoc g = parse_globe(j, "thin");
  auto allowed = std::make_shared<std::set<std::pair<Word, Word>>>();
  const json& cells = need(j, "cells", "");
  if (!cells.is_array()) fail("/cells", "expected a list");
  for (size_t k = 0; k < cells.size(); ++k) {
    std::string at = "/cells/" + std::to_string(k);
    Word in = g.word(need(cells[k], "in", at), at + "/in");
    Word out = g.word(need(cells[k], "out", at), at + "/out");
    if (g.one[in.front()].src != g.one[out.front()].src ||
        g.one[in.back()].tgt != g.one[out.back()].tgt)
      fail(at, "boundaries are not parallel");
    allowed->insert({in, out});
  }
  d.name = g.label;
  auto pred = [allowed](const Word& in, const Word& out) {
    return allowed->count({in, out}) > 0;
  };
  return std::make_shared<ThinStructure>(g.label, g.zero, g.one, pred, merges,
                                         flag(j, "single_output"));
}

SPtr parse_tabular(const json& j, bool merges, StructureDoc& d) {
  GlobeDoc g = parse_globe(j, "tabular");
  Budget tb = j.contains("table_budget") ? budget_of(j["table_budget"], "/table_budget")
                                         : d.budget.value_or(Budget{});
  auto T = std::make_shared<TabularStructure>(g.label, g.zero, g.one, tb, merges,
                                              flag(j, "single_output"));
  std::map<std::string, Cell> named;
  const json& cells = need(j, "cells", "");
  if (!cells.is_array()) fail("/cells", "expected a list");
  for (size_t k = 0; k < cells.size(); ++k) {
    std::string at = "/cells/" + std::to_string(k);
    std::string n = text(need(cells[k], "name", at), at + "/name");
    if (named.count(n)) fail(at + "/name", "duplicate 2-cell \"" + n + "\"");
    Word in = g.word(need(cells[k], "in", at), at + "/in");
    Word out = g.word(need(cells[k], "out", at), at + "/out");
    if (g.one[in.front()].src != g.one[out.front()].src ||
        g.one[in.back()].tgt != g.one[out.back()].tgt)
      fail(at, "boundaries are not parallel");
    if (!within(tb, *T, in, out)) fail(at, "cell outside the table budget");
    named[n] = {in, out, T->add_cell(in, out, n)};
  }
  auto cell = [&](const json& v, const std::string& at) {
    auto it = named.find(text(v, at));
    if (it == named.end()) fail(at, "undeclared 2-cell");
    return it->second;
  };
  if (j.contains("table")) {
    const json& tab = j["table"];
    if (!tab.is_array()) fail("/table", "expected a list");
    for (size_t k = 0; k < tab.size(); ++k) {
      std::string at = "/table/" + std::to_string(k);
      const json& e = tab[k];
      Cell t = cell(need(e, "t", at), at + "/t");
      Cell s = cell(need(e, "s", at), at + "/s");
      auto [j1, j2] = interval(need(e, "at", at), at + "/at");
      auto [i1, i2] = interval(need(e, "into", at), at + "/into");
      int m = (int)t.out.size(), p = (int)s.in.size();
      if (j1 < 1 || j2 < j1 || j2 > m) fail(at + "/at", "interval outside the outputs of t");
      if (i1 < 1 || i2 < i1 || i2 > p || i2 - i1 != j2 - j1)
        fail(at + "/into", "interval outside the inputs of s");
      if (!merges && j2 > j1) fail(at, "intervals need a merge kind");
      if (!legal_sides(j1, j2, m, i1, i2, p)) fail(at, "illegal gluing");
      if (slice(t.out, j1, j2) != slice(s.in, i1, i2)) fail(at, "glued 1-cells differ");
      Word rin, rout;
      merge_boundary(t, j1, j2, s, i1, i2, rin, rout);
      Cell r = cell(need(e, "result", at), at + "/result");
      if (r.in != rin || r.out != rout) fail(at + "/result", "result has the wrong boundary");
      T->set_entry({t, j1, j2, s, i1, i2}, r.tag);
    }
  }
  // every gluing inside the table budget needs an entry
  const auto& table = T->table();
  for_each_gluing(*T, cells_within(*T, tb), tb,
                  [&](const Cell& t, int j1, int j2, const Cell& s, int i1, int i2) {
                    if (!table.count({t, j1, j2, s, i1, i2}))
                      fail("/table", "missing entry for " + gluing_name(*T, t, j1, j2, s, i1, i2));
                  });
  d.name = g.label;
  return T;
}

std::shared_ptr<const FiniteBicategory> parse_bicategory(const json& j,
                                                         StructureDoc& d) {
  GlobeDoc g = parse_globe(j, "bicategory");
  auto B = std::make_shared<FiniteBicategory>();
  B->label = g.label;
  B->zero = g.zero;
  B->one = g.one;
  std::map<std::string, int> tid;
  const json& two = need(j, "two", "");
  if (!two.is_array()) fail("/two", "expected a list");
  for (size_t k = 0; k < two.size(); ++k) {
    std::string at = "/two/" + std::to_string(k);
    std::string n = text(need(two[k], "name", at), at + "/name");
    if (tid.count(n)) fail(at + "/name", "duplicate 2-cell \"" + n + "\"");
    int s = g.one_cell(need(two[k], "src", at), at + "/src");
    int t = g.one_cell(need(two[k], "tgt", at), at + "/tgt");
    if (g.one[s].src != g.one[t].src || g.one[s].tgt != g.one[t].tgt)
      fail(at, "source and target are not parallel");
    tid[n] = (int)B->two.size();
    B->two.push_back({s, t, n});
  }
  B->size_tables();
  auto two_cell = [&](const json& v, const std::string& at) {
    auto it = tid.find(text(v, at));
    if (it == tid.end()) fail(at, "undeclared 2-cell");
    return it->second;
  };
  auto object = [&](const std::string& key) -> const json& {
    const json& o = need(j, key, "");
    if (!o.is_object()) fail("/" + key, "expected an object");
    return o;
  };
  auto triples = [&](const std::string& key) -> const json& {
    const json& o = need(j, key, "");
    if (!o.is_array()) fail("/" + key, "expected a list");
    for (size_t k = 0; k < o.size(); ++k)
      if (!o[k].is_array() || o[k].size() != 3)
        fail("/" + key + "/" + std::to_string(k), "expected a triple");
    return o;
  };
  int n1 = B->n1(), n2 = B->n2();
  B->vunit.assign(n1, -1);
  B->hunit.assign(B->n0(), -1);
  B->lunit.assign(n1, -1);
  B->runit.assign(n1, -1);
  for (auto& [k, v] : object("vunit").items()) {
    int a = g.one_cell(json(k), "/vunit/" + k);
    int f = two_cell(v, "/vunit/" + k);
    if (B->two[f].src != a || B->two[f].tgt != a) fail("/vunit/" + k, "not an endo 2-cell");
    B->vunit[a] = f;
  }
  for (auto& [k, v] : object("hunit").items()) {
    int x = g.zero_cell(json(k), "/hunit/" + k);
    int a = g.one_cell(v, "/hunit/" + k);
    if (g.one[a].src != x || g.one[a].tgt != x) fail("/hunit/" + k, "not an endo 1-cell");
    B->hunit[x] = a;
  }
  const json& vc = triples("vcomp");
  for (size_t k = 0; k < vc.size(); ++k) {
    std::string at = "/vcomp/" + std::to_string(k);
    int f = two_cell(vc[k][0], at + "/0"), h = two_cell(vc[k][1], at + "/1"),
        r = two_cell(vc[k][2], at + "/2");
    if (B->two[f].tgt != B->two[h].src) fail(at, "not composable");
    B->vcomp[f * n2 + h] = r;
  }
  const json& h0 = triples("hcomp0");
  for (size_t k = 0; k < h0.size(); ++k) {
    std::string at = "/hcomp0/" + std::to_string(k);
    int a = g.one_cell(h0[k][0], at + "/0"), c = g.one_cell(h0[k][1], at + "/1"),
        r = g.one_cell(h0[k][2], at + "/2");
    if (g.one[a].tgt != g.one[c].src) fail(at, "not composable");
    B->hcomp0[a * n1 + c] = r;
  }
  const json& h2 = triples("hcomp2");
  for (size_t k = 0; k < h2.size(); ++k) {
    std::string at = "/hcomp2/" + std::to_string(k);
    int f = two_cell(h2[k][0], at + "/0"), h = two_cell(h2[k][1], at + "/1"),
        r = two_cell(h2[k][2], at + "/2");
    B->hcomp2[f * n2 + h] = r;
  }
  const json& as = need(j, "assoc", "");
  if (!as.is_array()) fail("/assoc", "expected a list");
  for (size_t k = 0; k < as.size(); ++k) {
    std::string at = "/assoc/" + std::to_string(k);
    if (!as[k].is_array() || as[k].size() != 4) fail(at, "expected [a, b, c, cell]");
    int a = g.one_cell(as[k][0], at + "/0"), b = g.one_cell(as[k][1], at + "/1"),
        c = g.one_cell(as[k][2], at + "/2");
    B->assoc[{a, b, c}] = two_cell(as[k][3], at + "/3");
  }
  for (auto& [k, v] : object("lunit").items())
    B->lunit[g.one_cell(json(k), "/lunit/" + k)] = two_cell(v, "/lunit/" + k);
  for (auto& [k, v] : object("runit").items())
    B->runit[g.one_cell(json(k), "/runit/" + k)] = two_cell(v, "/runit/" + k);

  // completeness, so that the axiom checker never reads a hole
  for (int a = 0; a < n1; ++a) {
    if (B->vunit[a] < 0) fail("/vunit", "missing " + g.one[a].name);
    if (B->lunit[a] < 0) fail("/lunit", "missing " + g.one[a].name);
    if (B->runit[a] < 0) fail("/runit", "missing " + g.one[a].name);
  }
  for (int x = 0; x < B->n0(); ++x)
    if (B->hunit[x] < 0) fail("/hunit", "missing " + g.zero[x]);
  for (int f = 0; f < n2; ++f)
    for (int h = 0; h < n2; ++h) {
      if (B->two[f].tgt == B->two[h].src && B->v(f, h) < 0)
        fail("/vcomp", "missing " + B->two[f].name + ";" + B->two[h].name);
      if (g.one[B->two[f].src].tgt == g.one[B->two[h].src].src && B->h2(f, h) < 0)
        fail("/hcomp2", "missing " + B->two[f].name + "*" + B->two[h].name);
    }
  for (int a = 0; a < n1; ++a)
    for (int c = 0; c < n1; ++c) {
      if (g.one[a].tgt != g.one[c].src) continue;
      if (B->h(a, c) < 0) fail("/hcomp0", "missing " + g.one[a].name + "*" + g.one[c].name);
      for (int e = 0; e < n1; ++e)
        if (g.one[c].tgt == g.one[e].src && !B->assoc.count({a, c, e}))
          fail("/assoc", "missing " + g.one[a].name + "," + g.one[c].name + "," + g.one[e].name);
    }
  d.name = g.label;
  return B;
}

// a 1-cell of S by name
int one_by_name(const Structure& S, const json& v, const std::string& at) {
  std::string n = text(v, at);
  for (int a = 0; a < S.num1(); ++a)
    if (S.name1(a) == n) return a;
  fail(at, "undeclared 1-cell \"" + n + "\" of " + S.label());
}

int zero_by_name(const Structure& S, const json& v, const std::string& at) {
  std::string n = text(v, at);
  for (int x = 0; x < S.num0(); ++x)
    if (S.name0(x) == n) return x;
  fail(at, "undeclared 0-cell \"" + n + "\" of " + S.label());
}

Word word_by_name(const Structure& S, const json& j, const std::string& at) {
  if (!j.is_array() || j.empty()) fail(at, "expected a nonempty list of 1-cells");
  Word w;
  for (size_t k = 0; k < j.size(); ++k)
    w.push_back(one_by_name(S, j[k], at + "/" + std::to_string(k)));
  return w;
}

// a cell given by boundary and either a tabular name or a tag
Cell cell_by_ref(const Structure& S, const json& j, const std::string& at) {
  Cell c{word_by_name(S, need(j, "in", at), at + "/in"),
         word_by_name(S, need(j, "out", at), at + "/out"), 0};
  if (!parallel(S, c.in, c.out)) fail(at, "boundaries are not parallel");
  uint32_t n = S.hom_size(c.in, c.out);
  if (j.contains("cell")) {
    auto* T = dynamic_cast<const TabularStructure*>(&S);
    if (!T) fail(at + "/cell", "named cells need a tabular structure");
    int k = T->find_cell(c.in, c.out, text(j["cell"], at + "/cell"));
    if (k < 0) fail(at + "/cell", "no such 2-cell on this boundary");
    c.tag = (uint32_t)k;
  } else if (j.contains("tag")) {
    c.tag = (uint32_t)integer(j["tag"], at + "/tag");
  }
  if (c.tag >= n) fail(at, "no such 2-cell on this boundary");
  return c;
}

MPtr parse_morphism(const json& j, SPtr& X, SPtr& Y, const std::string& at) {
  StructureDoc sd = parse_ref(need(j, "source", at), at + "/source");
  StructureDoc td = parse_ref(need(j, "target", at), at + "/target");
  if (!sd.structure || sd.kind == "pair") fail(at + "/source", "expected a structure");
  if (!td.structure || td.kind == "pair") fail(at + "/target", "expected a structure");
  X = sd.structure;
  Y = td.structure;
  std::vector<int> m0(X->num0(), -1), m1(X->num1(), -1);
  const json& j0 = need(j, "map0", at);
  if (!j0.is_object()) fail(at + "/map0", "expected an object");
  for (auto& [k, v] : j0.items())
    m0[zero_by_name(*X, json(k), at + "/map0/" + k)] =
        zero_by_name(*Y, v, at + "/map0/" + k);
  const json& j1 = need(j, "map1", at);
  if (!j1.is_object()) fail(at + "/map1", "expected an object");
  for (auto& [k, v] : j1.items())
    m1[one_by_name(*X, json(k), at + "/map1/" + k)] =
        one_by_name(*Y, v, at + "/map1/" + k);
  for (int x = 0; x < X->num0(); ++x)
    if (m0[x] < 0) fail(at + "/map0", "missing " + X->name0(x));
  for (int a = 0; a < X->num1(); ++a)
    if (m1[a] < 0) fail(at + "/map1", "missing " + X->name1(a));
  auto images = std::make_shared<std::map<Cell, uint32_t>>();
  if (j.contains("map2")) {
    const json& j2 = j["map2"];
    if (!j2.is_array()) fail(at + "/map2", "expected a list");
    for (size_t k = 0; k < j2.size(); ++k) {
      std::string a2 = at + "/map2/" + std::to_string(k);
      Cell c = cell_by_ref(*X, need(j2[k], "from", a2), a2 + "/from");
      Cell d = cell_by_ref(*Y, need(j2[k], "to", a2), a2 + "/to");
      (*images)[c] = d.tag;
    }
  }
  bool thin = Y->thin();
  std::string label = j.contains("label") ? text(j["label"], at + "/label")
                                          : X->label() + "->" + Y->label();
  return std::make_shared<FiniteMorphism>(
      label, m0, m1, [images, thin](const Cell& c, const Word&, const Word&) {
        if (thin) return 0u;
        auto it = images->find(c);
        if (it == images->end()) throw Error("map2 has no image for this cell");
        return it->second;
      });
}

StructureDoc parse_doc(const json& j) {
  if (!j.is_object()) fail("", "expected an object");
  StructureDoc d;
  d.source = j;
  d.kind = text(need(j, "kind", ""), "/kind");
  if (j.contains("budget")) d.budget = budget_of(j["budget"], "/budget");
  if (d.kind == "fixture") {
    d.name = text(need(j, "name", ""), "/name");
    d.structure = fixture(d.name);
    if (!d.structure) fail("/name", "unknown fixture \"" + d.name + "\"");
    if (d.name == "zg")
      d.bicategory = std::make_shared<const FiniteBicategory>(zg_source());
  } else if (d.kind == "thin-poly" || d.kind == "thin-merge") {
    d.structure = parse_thin(j, d.kind == "thin-merge", d);
  } else if (d.kind == "tabular-poly" || d.kind == "tabular-merge") {
    d.structure = parse_tabular(j, d.kind == "tabular-merge", d);
  } else if (d.kind == "bicategory") {
    d.bicategory = parse_bicategory(j, d);
    d.structure = groth(d.bicategory);
  } else if (d.kind == "morphism") {
    d.morphism = parse_morphism(j, d.structure, d.target, "");
    d.name = d.morphism->label();
  } else if (d.kind == "transfor") {
    SPtr X2, Y2;
    Transfor T;
    T.kind = Transfor::Kind::oplax;
    T.src = parse_morphism(need(j, "src", ""), d.structure, d.target, "/src");
    T.tgt = parse_morphism(need(j, "tgt", ""), X2, Y2, "/tgt");
    if (X2->label() != d.structure->label() || Y2->label() != d.target->label())
      fail("/tgt", "source and target morphisms have different endpoints");
    T.label = j.contains("label") ? text(j["label"], "/label") : "transfor";
    const Structure& X = *d.structure;
    const Structure& Y = *d.target;
    T.comp0.assign(X.num0(), -1);
    const json& c0 = need(j, "comp0", "");
    if (!c0.is_object()) fail("/comp0", "expected an object");
    for (auto& [k, v] : c0.items())
      T.comp0[zero_by_name(X, json(k), "/comp0/" + k)] = one_by_name(Y, v, "/comp0/" + k);
    for (int x = 0; x < X.num0(); ++x)
      if (T.comp0[x] < 0) fail("/comp0", "missing " + X.name0(x));
    const json& c1 = need(j, "comp1", "");
    if (!c1.is_object()) fail("/comp1", "expected an object");
    for (auto& [k, v] : c1.items())
      T.comp1[one_by_name(X, json(k), "/comp1/" + k)] = cell_by_ref(Y, v, "/comp1/" + k);
    for (int a = 0; a < X.num1(); ++a)
      if (!T.comp1.count(a)) fail("/comp1", "missing " + X.name1(a));
    d.name = T.label;
    d.transfor = T;
  } else {
    fail("/kind", "unknown kind \"" + d.kind + "\"");
  }
  return d;
}

}  // namespace

StructureDoc parse_structure(const std::string& bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw InputError("parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return parse_doc(j);
}

std::string emit_structure(const StructureDoc& d) {
  if (d.kind == "pair")
    return emit_structure(load_input(d.source["first"].get<std::string>())) +
           emit_structure(load_input(d.source["second"].get<std::string>()));
  return d.source.dump(2) + "\n";
}

StructureDoc load_input(const std::string& arg) {
  namespace fs = std::filesystem;
  auto read = [](const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    try {
      return parse_structure(ss.str());
    } catch (const InputError& e) {
      throw InputError(p.string() + ": " + e.what());
    }
  };
  std::error_code ec;
  if (fs::is_regular_file(arg, ec)) return read(arg);
  if (const char* dir = std::getenv("POLYWEAVE_FIXTURES")) {
    fs::path p = fs::path(dir) / (arg + ".json");
    if (fs::is_regular_file(p, ec)) return read(p);
  }
  if (fixture(arg)) return parse_doc(json{{"kind", "fixture"}, {"name", arg}});
  auto colon = arg.find(':');
  if (colon != std::string::npos) {
    StructureDoc a = load_input(arg.substr(0, colon));
    StructureDoc b = load_input(arg.substr(colon + 1));
    if (!a.structure || !b.structure || a.morphism || b.morphism)
      throw InputError("a pair joins two structures");
    StructureDoc d;
    d.kind = "pair";
    d.name = arg;
    d.structure = a.structure;
    d.target = b.structure;
    d.budget = a.budget ? a.budget : b.budget;
    d.source = json{{"first", arg.substr(0, colon)}, {"second", arg.substr(colon + 1)}};
    return d;
  }
  throw InputError("no file, fixture document or fixture named \"" + arg + "\"");
}

json structure_to_json(const Structure& X, const Budget& b) {
  json j;
  bool thin = X.thin();
  j["kind"] = std::string(thin ? "thin-" : "tabular-") + (X.has_merges() ? "merge" : "poly");
  j["label"] = X.label();
  j["budget"] = budget_json(b);
  if (!thin) j["table_budget"] = budget_json(b);
  if (X.single_output()) j["single_output"] = true;
  json zero = json::array();
  for (int x = 0; x < X.num0(); ++x) zero.push_back(X.name0(x));
  j["zero"] = zero;
  json one = json::array();
  for (int a = 0; a < X.num1(); ++a)
    one.push_back({{"name", X.name1(a)}, {"src", X.name0(X.src(a))}, {"tgt", X.name0(X.tgt(a))}});
  j["one"] = one;
  auto names = [&](const Word& w) {
    json r = json::array();
    for (int a : w) r.push_back(X.name1(a));
    return r;
  };
  auto cells = cells_within(X, b);
  std::map<Cell, std::string> cname;
  json jc = json::array();
  for (size_t k = 0; k < cells.size(); ++k) {
    json c;
    if (!thin) {
      cname[cells[k]] = "c" + std::to_string(k);
      c["name"] = cname[cells[k]];
    }
    c["in"] = names(cells[k].in);
    c["out"] = names(cells[k].out);
    jc.push_back(c);
  }
  j["cells"] = jc;
  if (!thin) {
    json tab = json::array();
    for_each_gluing(X, cells, b, [&](const Cell& t, int j1, int j2, const Cell& s,
                                     int i1, int i2) {
      Cell r = merge(X, t, j1, j2, s, i1, i2);
      tab.push_back({{"t", cname.at(t)}, {"at", json::array({j1, j2})},
                     {"s", cname.at(s)}, {"into", json::array({i1, i2})},
                     {"result", cname.at(r)}});
    });
    j["table"] = tab;
  }
  return j;
}

json bicategory_to_json(const FiniteBicategory& B) {
  json j;
  j["kind"] = "bicategory";
  j["label"] = B.label;
  j["zero"] = B.zero;
  json one = json::array();
  for (const auto& c : B.one)
    one.push_back({{"name", c.name}, {"src", B.zero[c.src]}, {"tgt", B.zero[c.tgt]}});
  j["one"] = one;
  // 2-cell names need not be unique in extracted tables
  auto tn = [&](int f) { return "f" + std::to_string(f); };
  json two = json::array();
  for (int f = 0; f < B.n2(); ++f)
    two.push_back({{"name", tn(f)}, {"src", B.one[B.two[f].src].name},
                   {"tgt", B.one[B.two[f].tgt].name}, {"note", B.two[f].name}});
  j["two"] = two;
  json vu = json::object(), hu = json::object(), lu = json::object(), ru = json::object();
  for (int a = 0; a < B.n1(); ++a) {
    vu[B.one[a].name] = tn(B.vunit[a]);
    lu[B.one[a].name] = tn(B.lunit[a]);
    ru[B.one[a].name] = tn(B.runit[a]);
  }
  for (int x = 0; x < B.n0(); ++x) hu[B.zero[x]] = B.one[B.hunit[x]].name;
  j["vunit"] = vu;
  j["hunit"] = hu;
  json vc = json::array(), h0 = json::array(), h2 = json::array(), as = json::array();
  for (int f = 0; f < B.n2(); ++f)
    for (int g = 0; g < B.n2(); ++g) {
      if (B.v(f, g) >= 0) vc.push_back({tn(f), tn(g), tn(B.v(f, g))});
      if (B.h2(f, g) >= 0) h2.push_back({tn(f), tn(g), tn(B.h2(f, g))});
    }
  for (int a = 0; a < B.n1(); ++a)
    for (int c = 0; c < B.n1(); ++c)
      if (B.h(a, c) >= 0) h0.push_back({B.one[a].name, B.one[c].name, B.one[B.h(a, c)].name});
  for (const auto& [k, f] : B.assoc)
    as.push_back({B.one[std::get<0>(k)].name, B.one[std::get<1>(k)].name,
                  B.one[std::get<2>(k)].name, tn(f)});
  j["vcomp"] = vc;
  j["hcomp0"] = h0;
  j["hcomp2"] = h2;
  j["assoc"] = as;
  j["lunit"] = lu;
  j["runit"] = ru;
  return j;
}

}  // namespace pw
