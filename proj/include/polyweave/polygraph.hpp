#pragma once

#include <string>
#include <vector>

#include "polyweave/core.hpp"
#include "polyweave/report.hpp"

namespace pw {

struct OneCellDecl {
  std::string id, src, tgt;
  bool operator==(const OneCellDecl&) const = default;
};

struct TwoCellDecl {
  std::string id;
  std::vector<std::string> inputs, outputs;
  bool operator==(const TwoCellDecl&) const = default;
};

// An explicit finite regular 2-polygraph.
struct Polygraph {
  std::vector<std::string> zero;
  std::vector<OneCellDecl> one;
  std::vector<TwoCellDecl> two;
  bool operator==(const Polygraph&) const = default;

  const OneCellDecl* find1(const std::string& id) const;
};

struct GlobularSet {
  std::vector<std::string> zero;
  std::vector<OneCellDecl> one;
  struct Two {
    std::string id, src, tgt;
    bool operator==(const Two&) const = default;
  };
  std::vector<Two> two;
};

enum class DualKind { op, co };

Report validate_globularity(const Polygraph& P);
Polygraph dual(const Polygraph& P, DualKind k);
GlobularSet truncate_globular(const Polygraph& P);
std::vector<std::vector<std::string>> enumerate_sequences(
    const Polygraph& P, const std::string& x, const std::string& y,
    int max_len);
std::vector<Word> enumerate_sequences(const Structure& X, int x, int y,
                                      int max_len);

// the cells of an intensional structure inside the budget, as a polygraph
Polygraph polygraph_of(const Structure& X, const Budget& b);

}  // namespace pw
