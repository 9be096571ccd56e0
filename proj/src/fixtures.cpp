#include <numeric>

#include "polyweave/bicat.hpp"
#include "polyweave/structures.hpp"

namespace pw {

namespace {

int parity(const Word& w) {
  int s = 0;
  for (int a : w) s ^= a;
  return s;
}

}  // namespace

// bits: 0 = 00, 1 = 11, p = 01, ~p = 10
SPtr fixture_b4() {
  static const int bits[4] = {0, 3, 1, 2};
  auto pred = [](const Word& in, const Word& out) {
    int meet = 3, join = 0;
    for (int a : in) meet &= bits[a];
    for (int b : out) join |= bits[b];
    return (meet & ~join) == 0;
  };
  return std::make_shared<ThinStructure>(
      "B4", std::vector<std::string>{"*"},
      std::vector<OneCell>{{"0"}, {"1"}, {"p"}, {"~p"}}, pred, false, false);
}

SPtr fixture_x2() {
  auto pred = [](const Word& in, const Word& out) {
    return parity(in) == parity(out);
  };
  return std::make_shared<ThinStructure>("X2", std::vector<std::string>{"*"},
                                         std::vector<OneCell>{{"0"}, {"1"}},
                                         pred, true, false);
}

SPtr fixture_x2m() {
  auto pred = [](const Word& in, const Word& out) {
    return parity(in) == parity(out);
  };
  return std::make_shared<ThinStructure>("X2m", std::vector<std::string>{"*"},
                                         std::vector<OneCell>{{"0"}, {"1"}},
                                         pred, true, true);
}

// the naturals truncated at 6 with at most four inputs; k1..kn -> j when
// the surplus is even and nonnegative
SPtr fixture_yn() {
  std::vector<OneCell> one;
  for (int k = 0; k <= 6; ++k) one.push_back({std::to_string(k)});
  auto pred = [](const Word& in, const Word& out) {
    if (in.size() > 4) return false;
    int s = std::accumulate(in.begin(), in.end(), 0);
    return s >= out[0] && (s - out[0]) % 2 == 0;
  };
  return std::make_shared<ThinStructure>("YN", std::vector<std::string>{"*"},
                                         one, pred, false, true);
}

SPtr fixture_s1() {
  auto pred = [](const Word&, const Word&) { return true; };
  return std::make_shared<ThinStructure>("S1", std::vector<std::string>{"*"},
                                         std::vector<OneCell>{{"a"}}, pred,
                                         false, true);
}

SPtr fixture_zg() {
  static SPtr zg =
      groth(std::make_shared<const FiniteBicategory>(zg_source()));
  return zg;
}

SPtr fixture(const std::string& name) {
  if (name == "b4") return fixture_b4();
  if (name == "x2") return fixture_x2();
  if (name == "x2m") return fixture_x2m();
  if (name == "yn") return fixture_yn();
  if (name == "s1") return fixture_s1();
  if (name == "zg") return fixture_zg();
  return nullptr;
}

std::vector<std::string> fixture_names() {
  return {"b4", "s1", "x2", "x2m", "yn", "zg"};
}

}  // namespace pw
