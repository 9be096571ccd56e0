#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyweave/core.hpp"

namespace pw {

using Fields = std::vector<std::pair<std::string, std::string>>;

struct Finding {
  std::string kind;
  Fields fields;
};

struct Certificate {
  std::string property;
  std::string subject;
  bool holds = true;
  Budget budget;
  size_t instances = 0;
  Fields witnesses;  // instance -> solution
  std::optional<std::string> counterexample;
  std::string note;

  void fail(std::string why) {
    if (holds) counterexample = std::move(why);
    holds = false;
  }
};

struct Report {
  std::string title;
  Budget budget;
  Fields info;  // flags and metadata, emitted before findings
  std::vector<Finding> findings;

  bool ok() const { return findings.empty(); }
  void add(std::string kind, Fields f) {
    findings.push_back({std::move(kind), std::move(f)});
  }
  void set(const std::string& k, const std::string& v) { info.push_back({k, v}); }
};

std::string emit_report(const Report& r);
std::string emit_certificate(const Certificate& c, bool with_witnesses);

// one-line summary usable as a report info value
std::string verdict(const Certificate& c);

}  // namespace pw
