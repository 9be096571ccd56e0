#include "polyweave/polygraph.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace pw {

const OneCellDecl* Polygraph::find1(const std::string& id) const {
  for (const auto& o : one)
    if (o.id == id) return &o;
  return nullptr;
}

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s = "(";
  for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k];
  return s + ")";
}

}  // namespace

Report validate_globularity(const Polygraph& P) {
  Report r;
  r.title = "globularity";
  std::set<std::string> zs(P.zero.begin(), P.zero.end());
  for (const auto& o : P.one) {
    if (!zs.count(o.src))
      r.add("dangling-reference", {{"cell", o.id}, {"field", "src"}, {"ref", o.src}});
    if (!zs.count(o.tgt))
      r.add("dangling-reference", {{"cell", o.id}, {"field", "tgt"}, {"ref", o.tgt}});
  }
  for (const auto& t : P.two) {
    if (t.inputs.empty() || t.outputs.empty()) {
      r.add("regularity", {{"cell", t.id},
                           {"detail", t.inputs.empty() ? "empty inputs"
                                                       : "empty outputs"}});
      continue;
    }
    bool dangling = false;
    for (const auto* side : {&t.inputs, &t.outputs})
      for (const auto& a : *side)
        if (!P.find1(a)) {
          r.add("dangling-reference", {{"cell", t.id}, {"ref", a}});
          dangling = true;
        }
    if (dangling) continue;
    auto seq_ok = [&](const std::vector<std::string>& w) {
      for (size_t k = 1; k < w.size(); ++k)
        if (P.find1(w[k - 1])->tgt != P.find1(w[k])->src) return false;
      return true;
    };
    if (!seq_ok(t.inputs))
      r.add("globularity", {{"cell", t.id}, {"equation", "inputs-composable"},
                            {"inputs", join(t.inputs)}});
    if (!seq_ok(t.outputs))
      r.add("globularity", {{"cell", t.id}, {"equation", "outputs-composable"},
                            {"outputs", join(t.outputs)}});
    if (P.find1(t.inputs.front())->src != P.find1(t.outputs.front())->src)
      r.add("globularity", {{"cell", t.id}, {"equation", "source"}});
    if (P.find1(t.inputs.back())->tgt != P.find1(t.outputs.back())->tgt)
      r.add("globularity", {{"cell", t.id}, {"equation", "target"}});
  }
  return r;
}

Polygraph dual(const Polygraph& P, DualKind k) {
  Polygraph Q = P;
  if (k == DualKind::op) {
    for (auto& o : Q.one) std::swap(o.src, o.tgt);
    for (auto& t : Q.two) {
      std::reverse(t.inputs.begin(), t.inputs.end());
      std::reverse(t.outputs.begin(), t.outputs.end());
    }
  } else {
    for (auto& t : Q.two) std::swap(t.inputs, t.outputs);
  }
  return Q;
}

GlobularSet truncate_globular(const Polygraph& P) {
  GlobularSet G;
  G.zero = P.zero;
  G.one = P.one;
  for (const auto& t : P.two)
    if (t.inputs.size() == 1 && t.outputs.size() == 1)
      G.two.push_back({t.id, t.inputs[0], t.outputs[0]});
  return G;
}

std::vector<std::vector<std::string>> enumerate_sequences(
    const Polygraph& P, const std::string& x, const std::string& y,
    int max_len) {
  std::vector<std::vector<std::string>> res;
  std::vector<std::string> cur;
  std::function<void(const std::string&)> go = [&](const std::string& at) {
    if (!cur.empty() && P.find1(cur.back())->tgt == y) res.push_back(cur);
    if ((int)cur.size() == max_len) return;
    for (const auto& o : P.one)
      if (o.src == at) {
        cur.push_back(o.id);
        go(o.tgt);
        cur.pop_back();
      }
  };
  go(x);
  std::stable_sort(res.begin(), res.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return res;
}

std::vector<Word> enumerate_sequences(const Structure& X, int x, int y,
                                      int max_len) {
  return X.words(x, y, max_len, 1 << 20);
}

Polygraph polygraph_of(const Structure& X, const Budget& b) {
  Polygraph P;
  for (int x = 0; x < X.num0(); ++x) P.zero.push_back(X.name0(x));
  for (int a = 0; a < X.num1(); ++a)
    P.one.push_back({X.name1(a), X.name0(X.src(a)), X.name0(X.tgt(a))});
  for (const Cell& c : cells_within(X, b)) {
    TwoCellDecl t;
    t.id = show(X, c);
    for (int a : c.in) t.inputs.push_back(X.name1(a));
    for (int a : c.out) t.outputs.push_back(X.name1(a));
    P.two.push_back(std::move(t));
  }
  return P;
}

}  // namespace pw
