#include "validator.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <tuple>

#include "axioms.hpp"
#include "fol.hpp"

namespace testtdo::validator {

std::string_view to_string(Severity s) { return s == Severity::Error ? "error" : "warning"; }
std::string_view to_string(Mode m) { return m == Mode::Draft ? "draft" : "complete"; }
std::string_view to_string(Verdict v) { return v == Verdict::Pass ? "pass" : "fail"; }

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "draft") return Mode::Draft;
  if (text == "complete") return Mode::Complete;
  return std::nullopt;
}

int code_rank(std::string_view code) {
  static const std::vector<std::string_view> fixed{kUnknownType,  kUnknownAttribute, kUnknownRelationship,
                                                   kEndpointMismatch, kLowerBound,   kUpperBound,
                                                   kLowerBoundDraft};
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    if (fixed[i] == code) return static_cast<int>(i);
  }
  if (code.substr(0, 4) == "AX-A") {
    int n = 0;
    for (char c : code.substr(4)) n = n * 10 + (c - '0');
    return 100 + n;
  }
  if (code == kA1Exclusivity) return 200;
  return 1000;
}

bool diagnostic_less(const Diagnostic& a, const Diagnostic& b) {
  const int ra = code_rank(a.code);
  const int rb = code_rank(b.code);
  return std::tie(ra, a.code, a.subjects, a.message) < std::tie(rb, b.code, b.subjects, b.message);
}

namespace {

Diagnostic error(std::string_view code, std::string message, std::vector<std::string> subjects) {
  return {std::string(code), Severity::Error, std::move(message), std::move(subjects), std::nullopt, std::nullopt};
}

bool known_type(const Schema& schema, const KnowledgeBase& kb, const std::string& id) {
  return schema.has_term(kb.individual(id).type_name);
}

bool conforms(const Schema& schema, const std::string& type, const std::string& required) {
  return schema.has_term(type) && schema.is_subtype(type, required);
}

}  // namespace

std::vector<Diagnostic> check_structure(const KnowledgeBase& kb, const Schema& schema) {
  std::vector<Diagnostic> out;
  const auto& tags = fol::classification_tags();
  for (const auto& [id, ind] : kb.individuals()) {
    if (!schema.has_term(ind.type_name)) {
      out.push_back(error(kUnknownType, "unknown type '" + ind.type_name + "'", {id}));
      continue;
    }
    if (schema.is_subtype(ind.type_name, "ActualResult") && schema.is_subtype(ind.type_name, "Incident")) {
      out.push_back({std::string(kA1Exclusivity), Severity::Warning,
                     "type '" + ind.type_name + "' is both an Actual Result and an Incident", {id}, "A1",
                     std::nullopt});
    }
    for (const auto& [name, value] : ind.attrs) {
      if (name == fol::kClassificationAttr) {
        if (!schema.is_subtype(ind.type_name, "TestableEntity")) {
          out.push_back(error(kUnknownAttribute,
                              "attribute 'classification' is only defined for TestableEntity, not '" +
                                  ind.type_name + "'",
                              {id}));
          continue;
        }
        for (const auto& token : fol::split_tags(value)) {
          if (std::find(tags.begin(), tags.end(), token) == tags.end()) {
            out.push_back(error(kUnknownAttribute, "unknown classification value '" + token + "'", {id}));
          }
        }
        continue;
      }
      if (!schema.has_attribute(ind.type_name, name)) {
        out.push_back(error(kUnknownAttribute,
                            "attribute '" + name + "' is not defined for type '" + ind.type_name + "'", {id}));
      }
    }
  }

  for (const auto& l : kb.links()) {
    if (schema.is_builtin_relation(l.rel_name)) continue;
    const auto rows = schema.relationship_defs(l.rel_name);
    if (rows.empty()) {
      out.push_back(error(kUnknownRelationship, "unknown relationship '" + l.rel_name + "'", {l.source, l.target}));
      continue;
    }
    if (!known_type(schema, kb, l.source) || !known_type(schema, kb, l.target)) continue;  // E001 already
    const std::string& st = kb.individual(l.source).type_name;
    const std::string& tt = kb.individual(l.target).type_name;
    bool accepted = std::any_of(rows.begin(), rows.end(), [&](const RelationshipDef& r) {
      return schema.is_subtype(st, r.source) && schema.is_subtype(tt, r.target);
    });
    for (const auto& sig : schema.axiom_signatures()) {
      if (accepted) break;
      accepted = sig.rel_name == l.rel_name && schema.is_subtype(st, sig.source) && schema.is_subtype(tt, sig.target);
    }
    if (!accepted) {
      out.push_back(error(kEndpointMismatch,
                          "no '" + l.rel_name + "' relationship accepts " + st + " -> " + tt, {l.source, l.target}));
    }
  }
  return out;
}

std::vector<Diagnostic> check_cardinalities(const KnowledgeBase& kb, const Schema& schema, Mode mode) {
  std::vector<Diagnostic> out;
  // Outgoing and incoming neighbours per (relation, individual).
  std::map<std::pair<std::string, std::string>, std::vector<std::string>> outgoing, incoming;
  for (const auto& l : kb.links()) {
    outgoing[{l.rel_name, l.source}].push_back(l.target);
    incoming[{l.rel_name, l.target}].push_back(l.source);
  }
  auto count_conforming = [&](const auto& index, const std::string& rel, const std::string& id,
                              const std::string& required) {
    auto it = index.find({rel, id});
    if (it == index.end()) return std::size_t{0};
    return static_cast<std::size_t>(std::count_if(it->second.begin(), it->second.end(), [&](const std::string& other) {
      return conforms(schema, kb.individual(other).type_name, required);
    }));
  };
  auto lower = [&](std::string message, const std::string& id) {
    if (mode == Mode::Complete) return error(kLowerBound, std::move(message), {id});
    return Diagnostic{std::string(kLowerBoundDraft), Severity::Warning, std::move(message), {id}, std::nullopt,
                      std::nullopt};
  };

  for (const auto& r : schema.relationships()) {
    for (const auto& [id, ind] : kb.individuals()) {
      if (conforms(schema, ind.type_name, r.source)) {
        const std::size_t n = count_conforming(outgoing, r.rel_name, id, r.target);
        if (n < r.target_mult.min) {
          out.push_back(lower("'" + r.rel_name + "' needs at least " + std::to_string(r.target_mult.min) + " " +
                                  r.target + " target(s), found " + std::to_string(n),
                              id));
        }
        if (r.target_mult.max && n > *r.target_mult.max) {
          out.push_back(error(kUpperBound,
                              "'" + r.rel_name + "' allows at most " + std::to_string(*r.target_mult.max) + " " +
                                  r.target + " target(s), found " + std::to_string(n),
                              {id}));
        }
      }
      if (conforms(schema, ind.type_name, r.target) && (r.source_mult.min > 0 || r.source_mult.max)) {
        const std::size_t n = count_conforming(incoming, r.rel_name, id, r.source);
        if (n < r.source_mult.min) {
          out.push_back(lower("'" + r.rel_name + "' needs at least " + std::to_string(r.source_mult.min) + " " +
                                  r.source + " source(s) pointing here, found " + std::to_string(n),
                              id));
        }
        if (r.source_mult.max && n > *r.source_mult.max) {
          out.push_back(error(kUpperBound,
                              "'" + r.rel_name + "' allows at most " + std::to_string(*r.source_mult.max) + " " +
                                  r.source + " source(s) pointing here, found " + std::to_string(n),
                              {id}));
        }
      }
    }
  }
  return out;
}

namespace {

std::optional<Diagnostic> axiom_diagnostic(const fol::Evaluator& evaluator, const axioms::AxiomDef& ax) {
  const fol::EvalResult r = evaluator.evaluate_with_witness(*ax.formula);
  if (r.value) return std::nullopt;
  Diagnostic d{"AX-" + ax.id, Severity::Error, ax.description, {}, ax.id, std::nullopt};
  if (r.witness) {
    const auto& vars = std::get<fol::Forall>(ax.formula->node).vars;
    std::vector<std::pair<std::string, std::string>> w;
    for (const auto& v : vars) {
      const std::string& id = r.witness->at(v);
      w.emplace_back(v, id);
      if (std::find(d.subjects.begin(), d.subjects.end(), id) == d.subjects.end()) d.subjects.push_back(id);
    }
    d.witness = std::move(w);
  }
  return d;
}

}  // namespace

std::vector<Diagnostic> check_axioms(const KnowledgeBase& kb, const Schema& schema) {
  const fol::Evaluator evaluator(kb, schema);
  const auto& catalog = axioms::builtin_axioms();
  std::vector<std::optional<Diagnostic>> found(catalog.size());
  if (kb.size() >= 64) {
    std::vector<std::future<std::optional<Diagnostic>>> jobs;
    for (const auto& ax : catalog) {
      jobs.push_back(std::async(std::launch::async, [&evaluator, &ax] { return axiom_diagnostic(evaluator, ax); }));
    }
    for (std::size_t i = 0; i < jobs.size(); ++i) found[i] = jobs[i].get();
  } else {
    for (std::size_t i = 0; i < catalog.size(); ++i) found[i] = axiom_diagnostic(evaluator, catalog[i]);
  }
  std::vector<Diagnostic> out;
  for (auto& d : found) {
    if (d) out.push_back(std::move(*d));
  }
  return out;
}

ValidationReport validate(const KnowledgeBase& kb, const Schema& schema, Mode mode) {
  ValidationReport report;
  report.mode = mode;
  for (auto family : {check_structure(kb, schema), check_cardinalities(kb, schema, mode), check_axioms(kb, schema)}) {
    for (auto& d : family) report.diagnostics.push_back(std::move(d));
  }
  std::sort(report.diagnostics.begin(), report.diagnostics.end(), diagnostic_less);
  for (const auto& d : report.diagnostics) {
    (d.severity == Severity::Error ? report.errors : report.warnings)++;
  }
  report.verdict = report.errors > 0 ? Verdict::Fail : Verdict::Pass;
  return report;
}

}  // namespace testtdo::validator
