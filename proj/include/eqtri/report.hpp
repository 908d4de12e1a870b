#pragma once
// Structured command reports: named checks with pass/fail/indeterminate/
// flagged statuses, computed invariants, and discrepancy warnings. One object
// renders both the JSON and the human-readable text, so goldens exist in a
// single format. "flagged" marks places where a published claim disagrees
// with the computed value; flags never fail a run.

#include <string>
#include <vector>

#include "json.hpp"

namespace eqtri {

using OrderedJson = nlohmann::ordered_json;

struct CheckEntry {
  std::string name;
  std::string status;  // pass | fail | indeterminate | flagged
  std::string details;
};

struct Report {
  std::string command;
  std::vector<std::string> args;
  std::vector<CheckEntry> checks;
  OrderedJson invariants = OrderedJson::object();
  std::vector<std::string> warnings;
  long long timing_ms = -1;  // negative: omitted from output

  void check(const std::string& name, bool ok, const std::string& details = "");
  void indeterminate(const std::string& name, const std::string& details = "");
  // Records the discrepancy both as a flagged check and as a warning.
  void flag(const std::string& name, const std::string& details);

  bool failed() const;
  int exit_code() const { return failed() ? 1 : 0; }

  OrderedJson to_json() const;
  std::string to_text() const;
};

}  // namespace eqtri
