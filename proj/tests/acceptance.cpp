// One line per acceptance criterion: "[PASS] N name (time) detail" or
// "[FAIL] ...". Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "polyweave/constructions.hpp"
#include "polyweave/io.hpp"
#include "polyweave/strictify.hpp"
#include "suites.hpp"

using namespace pw;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream why;
  void need(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) why << "; ";
      why << what;
      ok = false;
    }
  }
};

std::string info(const Report& r, const std::string& key) {
  for (const auto& [k, v] : r.info)
    if (k == key) return v;
  return "";
}

bool starts(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

int b4_bits(int a) {
  static const int bits[4] = {0, 3, 1, 2};  // 0, 1, p, ~p
  return bits[a];
}
int b4_of_bits(int v) {
  for (int a = 0; a < 4; ++a)
    if (b4_bits(a) == v) return a;
  return -1;
}

void c1_boolean(Outcome& o) {
  SPtr B = fixture("b4");
  Budget b{3, 3, 4};
  Report r = representability_report(B, b);
  o.need(info(r, "unital") == "holds", "not unital");
  o.need(info(r, "tensor-units(*)") == "1", "tensor unit is not 1");
  o.need(is_tensor_unit1(*B, 1, b).holds, "1 fails is_tensor_unit1");
  for (int a = 0; a < 4; ++a)
    for (int c = 0; c < 4; ++c) {
      int want = b4_of_bits((~b4_bits(a) | b4_bits(c)) & 3);
      auto rh = search_representing(*B, Kind::rhom, a, c, b);
      auto lh = search_representing(*B, Kind::lhom, a, c, b);
      o.need(rh && rh->cell1 == want, "rhom(" + B->name1(a) + "," + B->name1(c) + ")");
      o.need(lh && lh->cell1 == want, "lhom(" + B->name1(a) + "," + B->name1(c) + ")");
    }
  std::vector<int> div;
  for (int a = 0; a < 4; ++a)
    if (is_divisible1(B, a, Divis::tensor, b).holds) div.push_back(a);
  o.need(div == std::vector<int>{1}, "tensor-divisible set is not {1}");
  o.need(info(r, "tensor-divisible") == "1", "report lists another divisible set");
}

void c2_mod2(Outcome& o) {
  Budget b{3, 1, 4};
  SPtr X = fixture("x2m"), Y = fixture("yn");
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c) {
      auto t = search_representing(*X, Kind::tensor, a, c, b);
      auto rh = search_representing(*X, Kind::rhom, a, c, b);
      auto lh = search_representing(*X, Kind::lhom, a, c, b);
      std::string pair = "(" + std::to_string(a) + "," + std::to_string(c) + ")";
      o.need(t && t->cell1 == (a + c) % 2, "tensor" + pair);
      o.need(rh && rh->cell1 == (c - a + 2) % 2, "rhom" + pair);
      o.need(lh && lh->cell1 == (c - a + 2) % 2, "lhom" + pair);
    }
  Report rep = representability_report(underlying_polybicat(X), b);
  o.need(info(rep, "tensor-representable") == "holds", "X2m not tensor representable");
  StructureDoc iota = parse_structure(
      R"({"kind":"morphism","source":"x2m","target":"yn",)"
      R"("map0":{"*":"*"},"map1":{"0":"0","1":"1"}})");
  Report cl = classify_morphism(*iota.morphism, X, Y, b);
  o.need(cl.ok(), "classification has findings");
  o.need(starts(info(cl, "unital"), "holds"), "iota not unital");
  o.need(starts(info(cl, "preserves-left-homs"), "holds") &&
             starts(info(cl, "preserves-right-homs"), "holds"),
         "iota does not preserve homs");
  o.need(starts(info(cl, "tensor-strong"), "fails"), "iota is tensor strong");
  o.need(is_divisible1(X, 1, Divis::tensor, b).holds, "1 not divisible in X2m");
  o.need(!is_divisible1(Y, 1, Divis::tensor, b).holds, "1 divisible in YN");
}

void c3_suites(Outcome& o) {
  Budget b{3, 3, 4};
  size_t n2 = 0, nm = 0;
  for (const char* f : {"b4", "x2", "zg"}) {
    SPtr X = fixture(f);
    auto t = test::two_out_of_three(X, b);
    auto m = test::merge_unital(X, b);
    o.need(t.ok(), std::string("two-out-of-three on ") + f);
    o.need(m.ok(), std::string("invertibility on ") + f);
    o.need(m.checked > 0, std::string("invertibility examined nothing on ") + f);
    n2 += t.instances;
    nm += m.instances;
  }
  o.why << "two-out-of-three instances=" << n2 << " invertibility instances=" << nm;
}

void c4_coherentize(Outcome& o) {
  Budget b{3, 3, 4};
  SPtr Z = fixture("zg");
  auto raw = find_unit_witnesses(*Z, b);
  o.need(raw.has_value(), "no witnesses");
  if (!raw) return;
  // compose every left witness with the nontrivial automorphism of its target
  UnitWitnesses bad = *raw;
  for (auto& [a, l] : bad.left) {
    auto autos = hom(*Z, {a}, {a});
    auto unit = find_unit2(*Z, a, b);
    for (const Cell& t : autos)
      if (unit && t != *unit) l = cut(*Z, l, 1, t, 1);
  }
  o.need(bad != *raw, "perturbation did nothing");
  auto before = test::coherence_by_gluing(*Z, bad, b);
  o.need(!before.ok(), "perturbed witnesses already coherent");
  UnitWitnesses w = coherentize_witnesses(*Z, bad, b);
  auto after = test::coherence_by_gluing(*Z, w, b);
  o.need(after.ok(), "coherentized witnesses fail: " +
                         (after.failures.empty() ? "" : after.failures[0]));
  o.need(after.natural > 0 && after.natural2 > 0 && after.triangle > 0, "no instances");
  o.why << "natural=" << after.natural << " natural2=" << after.natural2
        << " triangle=" << after.triangle << " raw-violations=" << before.failures.size();
}

void c5_extract(Outcome& o) {
  Budget b{3, 3, 4};
  auto zsrc = std::make_shared<const FiniteBicategory>(zg_source());
  SPtr sources[2] = {fixture("x2"), groth(zsrc)};
  for (const SPtr& X : sources) {
    ExtractChoices ch = default_choices(*X, b);
    Extracted ex = extract_bicategory(*X, ch, b);
    Report ax = check_bicategory_axioms(ex.B);
    o.need(ax.ok(), "axioms fail on " + X->label());
    auto [n, badp] = test::pentagon_by_tables(ex.B);
    o.need(badp.empty(), "independent pentagon fails on " + X->label());
    o.need(info(ax, "pentagon-instances") == std::to_string(n),
           "pentagon count differs on " + X->label());
    o.need(n == 16, "expected 16 pentagons on " + X->label());
    RoundTrip rt = groth_extract_equivalence(X, ch, ex, b);
    o.need(verify_equivalence(rt.E, X, rt.Y, b).holds, "no equivalence on " + X->label());
  }
  o.why << "pentagons=16 each";
}

void c6_chu(Outcome& o) {
  Budget b{3, 3, 4};
  SPtr M = fixture("x2m");
  auto C = chu_build(M, b);
  o.need(check_cut_axioms(*C, b).ok(), "cut axioms");
  auto raw = find_unit_witnesses(*M, b);
  o.need(raw.has_value(), "no witnesses on X2m");
  if (!raw) return;
  UnitWitnesses w = coherentize_witnesses(*M, *raw, b);
  for (int a = 0; a < C->num0(); ++a) {
    ChuUnit U = chu_unit_synthesize(*C, w, a, b);
    o.need(U.holds() && U.unit >= 0, "unit synthesis at " + C->name0(a));
    if (U.unit >= 0)
      o.need(is_tensor_unit1(*C, U.unit, b).holds, "1_a fails is_tensor_unit1");
  }
  o.need(C->num1() == 4, "expected four Chu 1-cells");
  for (int A = 0; A < C->num1(); ++A)
    o.need(chu_adjunction_witness(*C, w, A, b).second.holds,
           "epsilon at " + C->name1(A));
  o.need(chu_involution_check(C, b).holds, "involution");
}

void c7_strictify(Outcome& o) {
  // through the command line entry point, reading the emitted report back
  std::ostringstream out, err;
  int code = run_command("strictify", "zg", Budget{3, 3, 4}, out, err);
  o.need(code == 0, "exit code " + std::to_string(code));
  std::map<std::string, std::string> kv;
  std::istringstream in(out.str());
  for (std::string line; std::getline(in, line);) {
    auto eq = line.find('=');
    if (eq != std::string::npos && line.find(' ') > eq)
      kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  o.need(!kv["triples"].empty() && kv["unit-associators"] == kv["triples"],
         "some associator is not a unit");
  o.need(kv["literal-equalities"] == kv["triples"], "tensors not literally equal");
  o.need(std::atoi(kv["non-unit-unitors"].c_str()) >= 1, "all unitors are units");
  o.need(starts(kv["equivalence"], "\"holds"), "zeta with epsilon is no equivalence");
  o.need(kv["findings"].empty() && out.str().find("findings: 0") != std::string::npos,
         "report has findings");
  o.need(out.str().find("strict associativity: certified") != std::string::npos,
         "certification line missing");
  o.why << "triples=" << kv["triples"] << " non-unit-unitors=" << kv["non-unit-unitors"];
}

void c8_monad(Outcome& o) {
  Report r = verify_monad_laws(fixture("x2"), Budget{3, 3, 3}, 0);
  o.need(r.ok(), std::to_string(r.findings.size()) + " findings");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<void(Outcome&)> run;
  };
  std::vector<Criterion> all = {
      {1, "boolean fixture report", 1, c1_boolean},
      {2, "mod-2 against naturals at (3,1,4)", 5, c2_mod2},
      {3, "two-out-of-three and invertibility suites", 60, c3_suites},
      {4, "coherentization of perturbed ZG witnesses", 30, c4_coherentize},
      {5, "extraction and round trip", 60, c5_extract},
      {6, "Chu construction on X2m", 30, c6_chu},
      {7, "semi-strictification of ZG", 120, c7_strictify},
      {8, "monad and distributive-law laws on X2", 60, c8_monad},
  };
  int failed = 0;
  for (const auto& c : all) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.need(false, std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.need(s < c.limit, "over the time limit");
    failed += !o.ok;
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name << " ("
              << std::fixed;
    std::cout.precision(2);
    std::cout << s << " s of " << c.limit << " s) " << o.why.str() << std::endl;
  }
  return failed;
}
