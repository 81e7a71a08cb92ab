#include "catalog.hpp"

#include <json.hpp>

#include "axioms.hpp"
#include "schema.hpp"

namespace testtdo::catalog {
namespace {

using json = nlohmann::ordered_json;

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : sep) + x;
  return out;
}

json bound_json(const Bound& b) { return b ? json(*b) : json(nullptr); }

json term_json(const TermDef& t) {
  json j;
  j["canonical_name"] = t.canonical_name;
  j["display_name"] = t.display_name;
  j["synonyms"] = t.synonyms;
  j["definition"] = t.definition;
  j["provenance"] = to_string(t.provenance);
  j["kind"] = to_string(t.kind);
  return j;
}

json attr_json(const AttributeDef& a) {
  json j;
  j["owner"] = a.owner;
  j["attr_name"] = a.attr_name;
  j["definition"] = a.definition;
  return j;
}

json rel_json(const RelationshipDef& r) {
  json j;
  j["rel_name"] = r.rel_name;
  j["source"] = r.source;
  j["target"] = r.target;
  j["source_min"] = r.source_mult.min;
  j["source_max"] = bound_json(r.source_mult.max);
  j["target_min"] = r.target_mult.min;
  j["target_max"] = bound_json(r.target_mult.max);
  j["definition"] = r.definition;
  return j;
}

std::string term_line(const Schema& schema, const TermDef& t) {
  std::string line = t.canonical_name + " kind=" + std::string(to_string(t.kind)) +
                     " provenance=" + std::string(to_string(t.provenance));
  const auto parents = schema.parents(t.canonical_name);
  if (!parents.empty()) line += " parents=" + join(parents, ",");
  if (!t.synonyms.empty()) line += " synonyms=\"" + join(t.synonyms, "\",\"") + "\"";
  return line + "\n";
}

std::string term_detail(const Schema& schema, const TermDef& t) {
  std::string out = term_line(schema, t);
  out += "  display_name: " + t.display_name + "\n";
  if (!t.definition.empty()) out += "  definition: " + t.definition + "\n";
  const auto ancestors = schema.ancestors(t.canonical_name);
  out += "  ancestors: " + join({ancestors.begin() + 1, ancestors.end()}, ", ") + "\n";
  return out;
}

std::string rel_line(const RelationshipDef& r) {
  return r.rel_name + "(" + r.source + " -> " + r.target + ") target=" + to_string(r.target_mult) +
         " source=" + to_string(r.source_mult) + "\n";
}

}  // namespace

std::string render_schema(SchemaView view, std::string_view term, Format format) {
  const Schema& schema = builtin_schema();
  if (!term.empty()) (void)schema.term(term);  // throws NotFoundError

  if (view == SchemaView::Counts) {
    const auto c = schema.counts();
    const auto axioms = axioms::builtin_axioms().size();
    if (format == Format::Json) {
      json j;
      j["own"] = c.own;
      j["reused"] = c.reused;
      j["imported"] = c.imported;
      j["attributes"] = c.attributes;
      j["relationships"] = c.relationships;
      j["axioms"] = axioms;
      return j.dump(2) + "\n";
    }
    return "own=" + std::to_string(c.own) + " reused=" + std::to_string(c.reused) +
           " attributes=" + std::to_string(c.attributes) + " relationships=" + std::to_string(c.relationships) +
           " axioms=" + std::to_string(axioms) + "\n";
  }

  json items = json::array();
  std::string text;
  if (view == SchemaView::Terms) {
    for (const auto& t : schema.terms()) {
      if (!term.empty() && t.canonical_name != term) continue;
      items.push_back(term_json(t));
      text += term.empty() ? term_line(schema, t) : term_detail(schema, t);
    }
  } else if (view == SchemaView::Attributes) {
    const auto attrs = term.empty() ? schema.attributes() : schema.attributes_of(term, true);
    for (const auto& a : attrs) {
      items.push_back(attr_json(a));
      text += a.owner + "." + a.attr_name + (a.definition.empty() ? "" : ": " + a.definition) + "\n";
    }
  } else {
    for (const auto& r : schema.relationships()) {
      if (!term.empty() && r.source != term && r.target != term) continue;
      items.push_back(rel_json(r));
      text += rel_line(r);
    }
  }
  return format == Format::Json ? items.dump(2) + "\n" : text;
}

std::string render_axiom_list(Format format) {
  json items = json::array();
  std::string text;
  for (const auto& a : axioms::builtin_axioms()) {
    json j;
    j["id"] = a.id;
    j["description"] = a.description;
    items.push_back(std::move(j));
    text += a.id + "\t" + a.description + "\n";
  }
  return format == Format::Json ? items.dump(2) + "\n" : text;
}

std::string render_axiom(std::string_view id, Format format) {
  const auto& a = axioms::axiom(id);
  const std::string formula = fol::to_string(*a.formula);
  if (format == Format::Json) {
    json j;
    j["id"] = a.id;
    j["description"] = a.description;
    j["deviations"] = a.deviations;
    j["formula"] = formula;
    return j.dump(2) + "\n";
  }
  std::string out = a.id + "\n" + "description: " + a.description + "\n" + "deviations:";
  if (a.deviations.empty()) out += " none";
  out += "\n";
  for (const auto& d : a.deviations) out += "  - " + d + "\n";
  out += "formula: " + formula + "\n";
  return out;
}

}  // namespace testtdo::catalog
