#include "eqtri/report.hpp"

namespace eqtri {

void Report::check(const std::string& name, bool ok, const std::string& details) {
  checks.push_back({name, ok ? "pass" : "fail", details});
}

void Report::indeterminate(const std::string& name, const std::string& details) {
  checks.push_back({name, "indeterminate", details});
}

void Report::flag(const std::string& name, const std::string& details) {
  checks.push_back({name, "flagged", details});
  warnings.push_back(name + ": " + details);
}

bool Report::failed() const {
  for (const auto& c : checks)
    if (c.status == "fail") return true;
  return false;
}

OrderedJson Report::to_json() const {
  OrderedJson j;
  j["command"] = command;
  j["args"] = args;
  j["checks"] = OrderedJson::array();
  for (const auto& c : checks) {
    OrderedJson e;
    e["name"] = c.name;
    e["status"] = c.status;
    if (!c.details.empty()) e["details"] = c.details;
    j["checks"].push_back(e);
  }
  j["invariants"] = invariants;
  j["warnings"] = warnings;
  j["result"] = failed() ? "fail" : "pass";
  if (timing_ms >= 0) j["timing_ms"] = timing_ms;
  return j;
}

namespace {

void render_value(std::string& out, const OrderedJson& v) {
  if (v.is_string()) {
    out += v.get<std::string>();
  } else {
    out += v.dump();
  }
}

}  // namespace

std::string Report::to_text() const {
  std::string out = "command: " + command;
  for (const auto& a : args) out += " " + a;
  out += '\n';
  for (const auto& c : checks) {
    out += "check " + c.name + ": " + c.status;
    if (!c.details.empty()) out += " -- " + c.details;
    out += '\n';
  }
  for (auto it = invariants.begin(); it != invariants.end(); ++it) {
    out += "  " + it.key() + ": ";
    render_value(out, it.value());
    out += '\n';
  }
  for (const auto& w : warnings) out += "warning: " + w + '\n';
  if (timing_ms >= 0) out += "timing_ms: " + std::to_string(timing_ms) + '\n';
  out += std::string("result: ") + (failed() ? "fail" : "pass") + '\n';
  return out;
}

}  // namespace eqtri
