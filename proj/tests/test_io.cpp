#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "polyweave/io.hpp"

using namespace pw;
namespace fs = std::filesystem;

namespace {

const char* kThin = R"({
  "kind": "thin-poly",
  "label": "chain",
  "budget": [1, 1, 2],
  "one": ["a", "b"],
  "cells": [
    {"in": ["a"], "out": ["a"]},
    {"in": ["b"], "out": ["b"]},
    {"in": ["a"], "out": ["b"]}
  ]
})";

std::string input_error(const std::string& text) {
  try {
    parse_structure(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

fs::path temp_file(const std::string& name, const std::string& text) {
  fs::path p = fs::temp_directory_path() / ("pw_test_" + name);
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int cli(const std::string& args, std::string* out = nullptr) {
  fs::path o = fs::temp_directory_path() / "pw_test_cli_out";
  std::string cmd = std::string(POLYWEAVE_BIN) + " " + args + " > " + o.string() + " 2>&1";
  int st = std::system(cmd.c_str());
  if (out) *out = slurp(o);
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

}  // namespace

TEST(Parse, ThinDocumentLoads) {
  StructureDoc d = parse_structure(kThin);
  ASSERT_TRUE(d.structure);
  EXPECT_EQ(d.kind, "thin-poly");
  EXPECT_EQ(d.structure->num1(), 2);
  EXPECT_EQ(d.structure->hom_size({0}, {1}), 1u);
  EXPECT_EQ(d.structure->hom_size({1}, {0}), 0u);
  ASSERT_TRUE(d.budget);
  EXPECT_EQ(*d.budget, (Budget{1, 1, 2}));
}

TEST(Parse, UndeclaredOneCellIsReportedAtItsKey) {
  std::string bad = kThin;
  bad.replace(bad.find(R"({"in": ["a"], "out": ["b"]})"), 28, R"({"in": ["a"], "out": ["c"]})");
  std::string e = input_error(bad);
  EXPECT_NE(e.find("at /cells/2/out/0"), std::string::npos) << e;
  EXPECT_NE(e.find("undeclared 1-cell \"c\""), std::string::npos) << e;
}

TEST(Parse, SyntaxAndSchemaErrors) {
  EXPECT_NE(input_error("{\"kind\": ").find("parse error at byte"), std::string::npos);
  EXPECT_NE(input_error(R"({"kind":"nope"})").find("at /kind"), std::string::npos);
  EXPECT_NE(input_error(R"({"kind":"thin-poly"})").find("missing key \"one\""),
            std::string::npos);
  EXPECT_NE(input_error(R"({"kind":"thin-poly","one":["a","a"],"cells":[]})").find("/one/1"),
            std::string::npos);
  EXPECT_NE(input_error(R"({"kind":"fixture","name":"q"})").find("unknown fixture"),
            std::string::npos);
}

TEST(Parse, TableEntriesAreValidated) {
  const char* doc = R"({
    "kind": "tabular-poly", "one": ["a"],
    "cells": [{"name": "u", "in": ["a"], "out": ["a"]},
              {"name": "v", "in": ["a", "a"], "out": ["a"]}],
    "table": [{"t": "u", "at": 1, "s": "v", "into": 2, "result": "u"}]
  })";
  std::string e = input_error(doc);
  EXPECT_NE(e.find("at /table/0/result"), std::string::npos) << e;
}

TEST(Parse, IncompleteTableIsAnInputError) {
  const char* doc = R"({
    "kind": "tabular-poly", "one": ["a"], "budget": [2, 1, 2],
    "cells": [{"name": "u", "in": ["a"], "out": ["a"]},
              {"name": "v", "in": ["a", "a"], "out": ["a"]}],
    "table": [{"t": "u", "at": 1, "s": "u", "into": 1, "result": "u"}]
  })";
  std::string e = input_error(doc);
  EXPECT_NE(e.find("at /table: missing entry"), std::string::npos) << e;
}

TEST(Emit, RoundTripIsByteStable) {
  StructureDoc d = parse_structure(kThin);
  std::string once = emit_structure(d);
  std::string twice = emit_structure(parse_structure(once));
  EXPECT_EQ(once, twice);
  StructureDoc z = parse_structure(structure_to_json(*fixture("zg"), Budget{2, 2, 3}).dump(2));
  std::string a = emit_structure(z);
  EXPECT_EQ(a, emit_structure(parse_structure(a)));
}

TEST(Emit, TabularZGDocumentPassesTheMergeAxioms) {
  Budget b{3, 3, 4};
  std::string text = structure_to_json(*fixture("zg"), b).dump(2);
  StructureDoc d = parse_structure(text);
  EXPECT_EQ(d.kind, "tabular-merge");
  EXPECT_TRUE(check_merge_axioms(*d.structure, b).ok());
}

TEST(Emit, BicategoryDocumentReloads) {
  FiniteBicategory B = zg_source();
  StructureDoc d = parse_structure(bicategory_to_json(B).dump());
  ASSERT_TRUE(d.bicategory);
  EXPECT_EQ(d.bicategory->n2(), B.n2());
  EXPECT_EQ(d.bicategory->assoc, B.assoc);
  EXPECT_TRUE(check_bicategory_axioms(*d.bicategory).ok());
}

TEST(Load, FixturesAndPairs) {
  for (const auto& n : fixture_names()) EXPECT_EQ(load_input(n).kind, "fixture");
  StructureDoc p = load_input("x2m:yn");
  EXPECT_EQ(p.kind, "pair");
  EXPECT_EQ(p.target->label(), "YN");
  EXPECT_THROW(load_input("no-such-thing"), InputError);
}

TEST(Load, FixtureDirectoryFromTheEnvironment) {
  fs::path dir = fs::temp_directory_path() / "pw_test_fixtures";
  fs::create_directories(dir);
  std::ofstream(dir / "chain.json") << kThin;
  setenv("POLYWEAVE_FIXTURES", dir.c_str(), 1);
  StructureDoc d = load_input("chain");
  unsetenv("POLYWEAVE_FIXTURES");
  EXPECT_EQ(d.structure->label(), "chain");
}

TEST(Report, EmptyReportAndDeterminism) {
  Report r;
  r.title = "empty";
  EXPECT_EQ(emit_report(r), "# polyweave report: empty\nbudget=3,3,4\nfindings: 0\n");
  std::ostringstream a, b, e;
  EXPECT_EQ(run_command("check", "x2", std::nullopt, a, e), 0);
  EXPECT_EQ(run_command("check", "x2", std::nullopt, b, e), 0);
  EXPECT_EQ(a.str(), b.str());
}

TEST(Cli, EveryFixturePassesCheck) {
  for (const auto& n : fixture_names()) EXPECT_EQ(cli("check " + n), 0) << n;
}

TEST(Cli, ExitCodes) {
  std::string out;
  EXPECT_EQ(cli("report b4", &out), 0);
  EXPECT_NE(out.find("tensor-divisible=1\n"), std::string::npos);
  EXPECT_EQ(cli("check nothing-here"), 2);
  EXPECT_EQ(cli("frobnicate x2"), 2);
  EXPECT_EQ(cli("check x2 --budget 3,3"), 2);
  fs::path bad = temp_file("undeclared.json", R"({"kind":"thin-poly","one":["a"],
    "cells":[{"in":["a"],"out":["z"]}]})");
  EXPECT_EQ(cli("check " + bad.string(), &out), 2);
  EXPECT_NE(out.find("/cells/0/out/0"), std::string::npos) << out;
}

TEST(Cli, CorruptedZGFailsWithASchemeViolation) {
  Budget b{2, 2, 3};
  auto j = structure_to_json(*fixture("zg"), b);
  // point one table entry at the other parallel cell
  auto& e = j["table"][0];
  std::string r = e["result"];
  std::string other;
  for (const auto& c : j["cells"])
    for (const auto& d : j["cells"])
      if (d["name"] == r && c["name"] != r && c["in"] == d["in"] && c["out"] == d["out"])
        other = c["name"];
  ASSERT_FALSE(other.empty());
  e["result"] = other;
  fs::path p = temp_file("zg_bad.json", j.dump(2));
  std::string out;
  EXPECT_EQ(cli("check " + p.string(), &out), 1);
  EXPECT_NE(out.find("finding kind=scheme-violation"), std::string::npos);
}

TEST(Cli, CheckOutWritesTheCanonicalDocument) {
  fs::path in = temp_file("chain.json", kThin);
  fs::path o1 = fs::temp_directory_path() / "pw_test_emit1.json";
  fs::path o2 = fs::temp_directory_path() / "pw_test_emit2.json";
  ASSERT_EQ(cli("check " + in.string() + " --out " + o1.string()), 0);
  ASSERT_EQ(cli("check " + o1.string() + " --out " + o2.string()), 0);
  EXPECT_EQ(slurp(o1), slurp(o2));
}

TEST(Cli, MorphismDocument) {
  std::string out;
  EXPECT_EQ(cli(std::string("report ") + POLYWEAVE_DATA + "/iota.json", &out), 0);
  EXPECT_NE(out.find("tensor-strong=\"fails"), std::string::npos) << out;
}

TEST(Cli, OtherCommandsSucceedOnTheirFixtures) {
  EXPECT_EQ(cli("extract-bicat zg"), 0);
  EXPECT_EQ(cli("extract-linear b4"), 0);
  EXPECT_EQ(cli("equiv x2"), 0);
  EXPECT_EQ(cli("chu x2m"), 0);
  EXPECT_EQ(cli("coherentize zg"), 0);
  EXPECT_EQ(cli("hom x2m:yn --budget 3,1,4"), 0);
  EXPECT_EQ(cli("groth x2 --budget 2,2,3"), 0);
  EXPECT_EQ(cli("strictify x2 --budget 2,2,3"), 0);
}
