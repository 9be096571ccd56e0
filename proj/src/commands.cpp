#include <fstream>
#include <sstream>

#include "polyweave/constructions.hpp"
#include "polyweave/io.hpp"
#include "polyweave/strictify.hpp"

namespace pw {

namespace {

struct Run {
  std::ostream& out;
  bool ok = true;
  void report(const Report& r) {
    out << emit_report(r);
    ok = ok && r.ok();
  }
  void cert(const Certificate& c) {
    out << emit_certificate(c, false);
    ok = ok && c.holds;
  }
  // reported but not counted toward the exit code
  void note(const Report& r) { out << emit_report(r); }
};

SPtr need_structure(const StructureDoc& d, const std::string& cmd) {
  if (!d.structure || d.morphism || d.transfor || d.kind == "pair")
    throw InputError(cmd + " needs a structure, got a " + d.kind + " document");
  return d.structure;
}

void check_structure(Run& r, const SPtr& X, const Budget& b) {
  if (X->has_merges())
    r.report(check_merge_axioms(*X, b));
  else
    r.report(check_cut_axioms(*X, b));
}

UnitWitnesses witnesses_or_throw(const Structure& X, const Budget& b) {
  auto w = find_unit_witnesses(X, b);
  if (!w) throw Error(X.label() + " has no unit witnesses within the budget");
  return *w;
}

void cmd_check(Run& r, const StructureDoc& d, const Budget& b) {
  if (d.transfor) {
    r.report(check_morphism(*d.transfor->src, *d.structure, *d.target, b));
    r.report(check_morphism(*d.transfor->tgt, *d.structure, *d.target, b));
    r.report(validate_transfor(*d.transfor, d.structure, d.target, b));
    return;
  }
  if (d.morphism) {
    r.report(check_morphism(*d.morphism, *d.structure, *d.target, b));
    return;
  }
  if (d.kind == "pair") throw InputError("check takes one document");
  if (d.bicategory) r.report(check_bicategory_axioms(*d.bicategory));
  check_structure(r, d.structure, b);
}

void cmd_report(Run& r, const StructureDoc& d, const Budget& b) {
  if (d.morphism) {
    r.report(classify_morphism(*d.morphism, d.structure, d.target, b));
    return;
  }
  SPtr X = need_structure(d, "report");
  if (X->has_merges()) {
    r.report(merge_representability_report(X, b));
    r.report(representability_report(underlying_polybicat(X), b));
  } else {
    r.report(representability_report(X, b));
  }
}

void write_doc(const std::string& path, const nlohmann::ordered_json& j) {
  if (path.empty()) return;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << j.dump(2) << "\n";
}

void cmd_extract_bicat(Run& r, const StructureDoc& d, const Budget& b,
                       const std::string& out_path) {
  SPtr X = need_structure(d, "extract-bicat");
  ExtractChoices ch = default_choices(*X, b);
  Extracted ex = extract_bicategory(*X, ch, b);
  Report info{"extracted " + ex.B.label, b, {}, {}};
  info.set("0-cells", std::to_string(ex.B.n0()));
  info.set("1-cells", std::to_string(ex.B.n1()));
  info.set("2-cells", std::to_string(ex.B.n2()));
  r.note(info);
  r.report(check_bicategory_axioms(ex.B));
  write_doc(out_path, bicategory_to_json(ex.B));
}

void cmd_extract_linear(Run& r, const StructureDoc& d, const Budget& b) {
  SPtr X = need_structure(d, "extract-linear");
  ExtractChoices tensor = default_choices(*X, b);
  ExtractChoices par = default_choices(*make_co(X), b);
  LinearBicatData L = extract_linear(X, tensor, par, b);
  r.report(check_bicategory_axioms(L.tensor.B));
  r.report(check_bicategory_axioms(L.par.B));
  r.report(check_linear_shapes(*X, L));
}

void cmd_groth(Run& r, const StructureDoc& d, const Budget& b,
               const std::string& out_path) {
  std::shared_ptr<const FiniteBicategory> B = d.bicategory;
  if (!B) {
    SPtr X = need_structure(d, "groth");
    ExtractChoices ch = default_choices(*X, b);
    B = std::make_shared<const FiniteBicategory>(extract_bicategory(*X, ch, b).B);
  }
  r.report(check_bicategory_axioms(*B));
  SPtr G = groth(B);
  check_structure(r, G, b);
  r.report(merge_representability_report(G, b));
  write_doc(out_path, structure_to_json(*G, b));
}

void cmd_hom(Run& r, const StructureDoc& d, const Budget& b) {
  if (!d.target || d.transfor || d.morphism)
    throw InputError("hom needs a pair X:Y");
  auto H = std::make_shared<HomObject>(d.structure, d.target, b);
  Report info{"hom " + H->label(), b, {}, {}};
  info.set("morphisms", std::to_string(H->num0()));
  info.set("transformations", std::to_string(H->num1()));
  r.note(info);
  check_structure(r, H, b);
}

void cmd_equiv(Run& r, const StructureDoc& d, const Budget& b) {
  SPtr X = need_structure(d, "equiv");
  ExtractChoices ch = default_choices(*X, b);
  Extracted ex = extract_bicategory(*X, ch, b);
  r.report(check_bicategory_axioms(ex.B));
  RoundTrip rt = groth_extract_equivalence(X, ch, ex, b);
  r.cert(verify_equivalence(rt.E, X, rt.Y, b));
}

void cmd_chu(Run& r, const StructureDoc& d, const Budget& b) {
  SPtr M = need_structure(d, "chu");
  auto C = chu_build(M, b);
  r.report(check_cut_axioms(*C, b));
  r.report(check_chu_bands(*C, b));
  UnitWitnesses w = coherentize_witnesses(*M, witnesses_or_throw(*M, b), b);
  for (int a = 0; a < C->num0(); ++a)
    for (const auto& c : chu_unit_synthesize(*C, w, a, b).certs) r.cert(c);
  for (int A = 0; A < C->num1(); ++A) r.cert(chu_adjunction_witness(*C, w, A, b).second);
  r.cert(chu_involution_check(C, b));
}

void cmd_strictify(Run& r, const StructureDoc& d, const Budget& b) {
  SPtr X = need_structure(d, "strictify");
  Report rep = strictify_report(X, b);
  r.report(rep);
  for (const auto& [k, v] : rep.info)
    if (k == "strict associativity" && v == "certified" && rep.ok())
      r.out << "strict associativity: certified\n";
}

void cmd_coherentize(Run& r, const StructureDoc& d, const Budget& b) {
  SPtr X = need_structure(d, "coherentize");
  UnitWitnesses raw = witnesses_or_throw(*X, b);
  Report before = check_witness_coherence(*X, raw, b);
  before.title = "raw witnesses: " + before.title;
  r.note(before);
  UnitWitnesses w = coherentize_witnesses(*X, raw, b);
  r.report(check_witness_coherence(*X, w, b));
}

}  // namespace

int run_command(const std::string& cmd, const std::string& input,
                const std::optional<Budget>& budget, std::ostream& out,
                std::ostream& err, const std::string& out_path) {
  std::ostringstream text;
  try {
    StructureDoc d = load_input(input);
    Budget b = budget ? *budget : d.budget.value_or(Budget{3, 3, 4});
    Run r{text};
    if (cmd == "check") cmd_check(r, d, b);
    else if (cmd == "report") cmd_report(r, d, b);
    else if (cmd == "extract-bicat") cmd_extract_bicat(r, d, b, out_path);
    else if (cmd == "extract-linear") cmd_extract_linear(r, d, b);
    else if (cmd == "groth") cmd_groth(r, d, b, out_path);
    else if (cmd == "hom") cmd_hom(r, d, b);
    else if (cmd == "equiv") cmd_equiv(r, d, b);
    else if (cmd == "chu") cmd_chu(r, d, b);
    else if (cmd == "strictify") cmd_strictify(r, d, b);
    else if (cmd == "coherentize") cmd_coherentize(r, d, b);
    else throw InputError("unknown command \"" + cmd + "\"");
    out << text.str();
    if (!out_path.empty() && cmd != "extract-bicat" && cmd != "groth") {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw InputError("cannot write " + out_path);
      f << (cmd == "check" ? emit_structure(d) : text.str());
    }
    return r.ok ? 0 : 1;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    out << text.str();
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace pw
