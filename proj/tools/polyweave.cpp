#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "polyweave/io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"polyweave: check and transform finite poly- and merge-bicategories"};
  std::string cmd, input, budget_text, out_path;
  app.add_option("cmd", cmd, "check, report, extract-bicat, extract-linear, groth, hom, "
                             "equiv, chu, strictify or coherentize")
      ->required();
  app.add_option("input", input, "file, fixture keyword, or X:Y for hom")->required();
  app.add_option("--budget", budget_text, "I,O,L (default 3,3,4 or the document's)");
  app.add_option("--out", out_path, "write the resulting document or report here");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  std::optional<pw::Budget> budget;
  if (!budget_text.empty()) {
    pw::Budget b;
    char c1 = 0, c2 = 0;
    std::istringstream in(budget_text);
    if (!(in >> b.max_in >> c1 >> b.max_out >> c2 >> b.max_seq) || c1 != ',' ||
        c2 != ',' || !in.eof() || b.max_in < 1 || b.max_out < 1 || b.max_seq < 1) {
      std::cerr << "input error: --budget expects three positive integers I,O,L\n";
      return 2;
    }
    budget = b;
  }
  return pw::run_command(cmd, input, budget, std::cout, std::cerr, out_path);
}
