#pragma once

// Property suites and independent checkers shared by the unit tests and the
// acceptance binary. Nothing here calls the library's own checkers for the
// property under test; only primitives (merge, cut, divisibility verdicts,
// table lookups) are used.

#include <optional>
#include <string>
#include <vector>

#include "polyweave/bicat.hpp"
#include "polyweave/mergebicat.hpp"
#include "polyweave/polybicat.hpp"

namespace pw::test {

struct SuiteResult {
  size_t instances = 0;  // cells where the premise held
  size_t checked = 0;    // cells examined
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// For p : (e, e') -> (e'') with at least two of the three single-position
// divisibility verdicts: whenever two of e, e', e'' are tensor divisible, so
// is the third, and p is divisible at all three positions.
inline SuiteResult two_out_of_three(const SPtr& Xp, const Budget& b) {
  SuiteResult r;
  SPtr U = underlying_polybicat(Xp);
  const Structure& X = *U;
  std::vector<int> tdiv(X.num1());
  for (int a = 0; a < X.num1(); ++a)
    tdiv[a] = is_divisible1(U, a, Divis::tensor, b).holds;
  for (const Cell& p : cells_within(X, b)) {
    if (p.in.size() != 2 || p.out.size() != 1) continue;
    ++r.checked;
    bool d[3] = {divisible(X, p, Side::input, 1, b),
                 divisible(X, p, Side::input, 2, b),
                 divisible(X, p, Side::output, 1, b)};
    if (d[0] + d[1] + d[2] < 2) continue;
    int e[3] = {p.in[0], p.in[1], p.out[0]};
    int known = tdiv[e[0]] + tdiv[e[1]] + tdiv[e[2]];
    if (known < 2) continue;
    ++r.instances;
    if (known != 3) r.failures.push_back("third 1-cell not divisible at " + show(X, p));
    if (!(d[0] && d[1] && d[2]))
      r.failures.push_back("not everywhere divisible: " + show(X, p));
  }
  return r;
}

// Divisible along the whole output iff along the whole input iff an inverse
// exists; the inverse composes to units on both sides. Poly-bicategories
// only have singleton intervals, so there the unary cells are examined.
inline SuiteResult merge_unital(const SPtr& Xp, const Budget& b) {
  SuiteResult r;
  const Structure& X = *Xp;
  bool merges = X.has_merges();
  for (const Cell& p : cells_within(X, b)) {
    int n = (int)p.in.size(), m = (int)p.out.size();
    if (!merges && (n != 1 || m != 1)) continue;
    ++r.checked;
    bool dout = divisible(X, p, Side::output, 1, m, b);
    bool din = divisible(X, p, Side::input, 1, n, b);
    std::optional<Cell> inv;
    try {
      inv = merges ? invert2(X, p, b) : inverse2(X, p, b);
    } catch (const Error&) {
    }
    if (dout != din || din != inv.has_value())
      r.failures.push_back("verdicts disagree at " + show(X, p));
    if (!inv) continue;
    ++r.instances;
    // p then inverse along the whole interval is a unit on the inputs
    auto unit = [&](const Cell& c) {
      return merges ? is_seq_unit(X, c, b).holds : is_unit2(X, c, b).holds;
    };
    try {
      Cell pq = merge(X, p, 1, m, *inv, 1, m);
      Cell qp = merge(X, *inv, 1, n, p, 1, n);
      if (pq.in != p.in || pq.out != p.in || !unit(pq) ||
          qp.in != p.out || qp.out != p.out || !unit(qp))
        r.failures.push_back("inverse does not compose to units at " + show(X, p));
    } catch (const BudgetExceeded&) {
    }
  }
  return r;
}

struct CoherenceCount {
  size_t natural = 0, natural2 = 0, triangle = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// naturality of l and r and the triangle, on every cell within b, by direct
// gluing
inline CoherenceCount coherence_by_gluing(const Structure& X, const UnitWitnesses& w,
                                          const Budget& b) {
  CoherenceCount c;
  auto eq = [&](const char* name, const Cell& p, size_t& n, auto lhs, auto rhs) {
    Cell x, y;
    try {
      x = lhs();
      y = rhs();
    } catch (const BudgetExceeded&) {
      return;
    }
    ++n;
    if (x != y) c.failures.push_back(std::string(name) + " at " + show(X, p));
  };
  for (const Cell& p : cells_within(X, b)) {
    int n = (int)p.in.size(), m = (int)p.out.size();
    const Cell& lin = w.left.at(p.in[0]);
    const Cell& lout = w.left.at(p.out[0]);
    const Cell& rin = w.right.at(p.in[n - 1]);
    const Cell& rout = w.right.at(p.out[m - 1]);
    // (1x, in) -> out, two ways
    eq("natural", p, c.natural, [&] { return merge(X, p, 1, 1, lout, 2, 2); },
       [&] { return merge(X, lin, 1, 1, p, 1, 1); });
    // (in, 1y) -> out, two ways
    eq("natural2", p, c.natural2, [&] { return merge(X, p, m, m, rout, 1, 1); },
       [&] { return merge(X, rin, 1, 1, p, n, n); });
    for (int k = 1; k < n; ++k) {
      const Cell& r = w.right.at(p.in[k - 1]);
      const Cell& l = w.left.at(p.in[k]);
      eq("triangle", p, c.triangle, [&] { return merge(X, r, 1, 1, p, k, k); },
         [&] { return merge(X, l, 1, 1, p, k + 1, k + 1); });
    }
  }
  return c;
}

// pentagon by table lookups: for every composable a, b, c, d both paths
// from ((ab)c)d to a(b(cd)) agree
inline std::pair<size_t, std::vector<std::string>> pentagon_by_tables(
    const FiniteBicategory& B) {
  size_t n = 0;
  std::vector<std::string> bad;
  auto id = [&](int a) { return B.vunit[a]; };
  for (int a = 0; a < B.n1(); ++a)
    for (int b = 0; b < B.n1(); ++b)
      for (int c = 0; c < B.n1(); ++c)
        for (int d = 0; d < B.n1(); ++d) {
          if (B.one[a].tgt != B.one[b].src || B.one[b].tgt != B.one[c].src ||
              B.one[c].tgt != B.one[d].src)
            continue;
          int ab = B.h(a, b), bc = B.h(b, c), cd = B.h(c, d);
          // ((ab)c)d -> (ab)(cd) -> a(b(cd))
          int top = B.v(B.alpha(ab, c, d), B.alpha(a, b, cd));
          // ((ab)c)d -> (a(bc))d -> a((bc)d) -> a(b(cd))
          int s1 = B.h2(B.alpha(a, b, c), id(d));
          int s2 = B.alpha(a, bc, d);
          int s3 = B.h2(id(a), B.alpha(b, c, d));
          int bottom = B.v(B.v(s1, s2), s3);
          ++n;
          if (top != bottom)
            bad.push_back(B.one[a].name + "," + B.one[b].name + "," + B.one[c].name +
                          "," + B.one[d].name);
        }
  return {n, bad};
}

}  // namespace pw::test
