#pragma once

#include <memory>
#include <optional>
#include <ostream>
#include <string>

#include "json.hpp"
#include "polyweave/bicat.hpp"
#include "polyweave/mergebicat.hpp"

namespace pw {

// malformed documents, unknown fixtures, unsupported command/kind pairs
class InputError : public Error {
 public:
  using Error::Error;
};

// A parsed input. kind is one of fixture, thin-poly, thin-merge,
// tabular-poly, tabular-merge, bicategory, morphism, transfor, pair.
struct StructureDoc {
  std::string kind;
  std::string name;  // fixture keyword or label
  std::optional<Budget> budget;
  SPtr structure;  // structures; source of morphisms and transformations
  SPtr target;     // morphisms, transformations, pairs
  std::shared_ptr<const FiniteBicategory> bicategory;  // bicategory, zg
  MPtr morphism;
  std::optional<Transfor> transfor;
  nlohmann::ordered_json source;  // the document as read
};

// the JSON schema of docs/schema.md; errors name the offending key
StructureDoc parse_structure(const std::string& text);
// canonical text of a document; parse(emit(d)) emits the same bytes
std::string emit_structure(const StructureDoc& d);

// a file path, a document in $POLYWEAVE_FIXTURES, a fixture keyword, or
// two of these joined by ':'
StructureDoc load_input(const std::string& arg);

// a tabular (or thin) document listing every cell and gluing within b
nlohmann::ordered_json structure_to_json(const Structure& X, const Budget& b);
nlohmann::ordered_json bicategory_to_json(const FiniteBicategory& B);

// runs one command; returns the exit code (0 all hold, 1 a check failed,
// 2 input error). out_path receives a document: the extracted bicategory for
// extract-bicat, the tabulated Grothendieck structure for groth, the
// canonical input for check, the report text otherwise.
int run_command(const std::string& cmd, const std::string& input,
                const std::optional<Budget>& budget, std::ostream& out,
                std::ostream& err, const std::string& out_path = "");

}  // namespace pw
