#include "polyweave/report.hpp"

namespace pw {

namespace {

// values with spaces or '=' are quoted so lines stay machine-parseable
std::string quote(const std::string& v) {
  bool plain = !v.empty();
  for (char c : v)
    if (c == ' ' || c == '=' || c == '"' || c == '\t') plain = false;
  if (plain) return v;
  std::string r = "\"";
  for (char c : v) {
    if (c == '"' || c == '\\') r += '\\';
    r += c;
  }
  return r + "\"";
}

}  // namespace

std::string emit_report(const Report& r) {
  std::string s = "# polyweave report: " + r.title + "\n";
  s += "budget=" + r.budget.str() + "\n";
  for (const auto& [k, v] : r.info) s += k + "=" + quote(v) + "\n";
  s += "findings: " + std::to_string(r.findings.size()) + "\n";
  for (const auto& f : r.findings) {
    s += "finding kind=" + quote(f.kind);
    for (const auto& [k, v] : f.fields) s += " " + k + "=" + quote(v);
    s += "\n";
  }
  return s;
}

std::string verdict(const Certificate& c) {
  std::string s = c.holds ? "holds" : "fails";
  s += " instances=" + std::to_string(c.instances);
  if (!c.holds && c.counterexample) s += " counterexample=" + *c.counterexample;
  return s;
}

std::string emit_certificate(const Certificate& c, bool with_witnesses) {
  std::string s = "certificate property=" + quote(c.property) +
                  " subject=" + quote(c.subject) +
                  " verdict=" + (c.holds ? "holds" : "fails") +
                  " budget=" + c.budget.str() +
                  " instances=" + std::to_string(c.instances) + "\n";
  if (!c.note.empty()) s += "note=" + quote(c.note) + "\n";
  if (c.counterexample) s += "counterexample=" + quote(*c.counterexample) + "\n";
  if (with_witnesses)
    for (const auto& [k, v] : c.witnesses)
      s += "witness instance=" + quote(k) + " solution=" + quote(v) + "\n";
  return s;
}

}  // namespace pw
