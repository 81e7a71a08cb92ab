#include <json.hpp>

#include "validator.hpp"

namespace testtdo::validator {

std::string render_text(const ValidationReport& report) {
  std::string out;
  for (const auto& d : report.diagnostics) {
    std::string subjects;
    for (const auto& s : d.subjects) subjects += (subjects.empty() ? "" : ", ") + s;
    if (subjects.empty()) subjects = "-";
    out += d.code + " " + std::string(to_string(d.severity)) + " " + subjects + ": " + d.message;
    if (d.witness) {
      out += " [witness:";
      for (const auto& [var, id] : *d.witness) out += " " + var + "=" + id;
      out += "]";
    }
    out += "\n";
  }
  out += "verdict: " + std::string(to_string(report.verdict)) + " (mode " + std::string(to_string(report.mode)) +
         ", " + std::to_string(report.errors) + " errors, " + std::to_string(report.warnings) + " warnings)\n";
  return out;
}

std::string render_json(const ValidationReport& report) {
  using json = nlohmann::ordered_json;
  json diagnostics = json::array();
  for (const auto& d : report.diagnostics) {
    json item;
    item["code"] = d.code;
    item["severity"] = to_string(d.severity);
    item["message"] = d.message;
    item["subjects"] = d.subjects;
    if (d.axiom_id) item["axiom_id"] = *d.axiom_id;
    if (d.witness) {
      json w = json::object();
      for (const auto& [var, id] : *d.witness) w[var] = id;
      item["witness"] = std::move(w);
    }
    diagnostics.push_back(std::move(item));
  }
  json root;
  root["verdict"] = to_string(report.verdict);
  root["mode"] = to_string(report.mode);
  root["counts"] = {{"errors", report.errors}, {"warnings", report.warnings}};
  root["diagnostics"] = std::move(diagnostics);
  return root.dump(2) + "\n";
}

}  // namespace testtdo::validator
