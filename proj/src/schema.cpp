#include "schema.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

namespace testtdo {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::TestTDO: return "TestTDO";
    case Provenance::TFO: return "TFO";
    case Provenance::SCO: return "SCO";
    case Provenance::ProcCO: return "ProcCO";
    case Provenance::ProjCO: return "ProjCO";
    case Provenance::GCO: return "GCO";
    case Provenance::NFRsTDO: return "NFRsTDO";
    case Provenance::FRsTDO: return "FRsTDO";
  }
  return "?";
}

std::string_view to_string(TermKind k) {
  switch (k) {
    case TermKind::OwnOrExtended: return "own_or_extended";
    case TermKind::Reused: return "reused";
    case TermKind::ImportedStub: return "imported_stub";
  }
  return "?";
}

std::string to_string(const Multiplicity& m) {
  std::string out = std::to_string(m.min) + "..";
  out += m.max ? std::to_string(*m.max) : "*";
  return out;
}

Schema::Schema(std::vector<TermDef> terms, std::vector<TaxonomyEdge> taxonomy,
               std::vector<AttributeDef> attributes,
               std::vector<RelationshipDef> relationships,
               std::vector<LinkSignature> axiom_signatures,
               std::vector<std::string> builtin_relations)
    : terms_(std::move(terms)),
      taxonomy_(std::move(taxonomy)),
      attributes_(std::move(attributes)),
      relationships_(std::move(relationships)),
      axiom_signatures_(std::move(axiom_signatures)),
      builtin_relations_(std::move(builtin_relations)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    index_.emplace(terms_[i].canonical_name, i);
  }
  parents_.resize(terms_.size());
  for (const auto& e : taxonomy_) {
    auto c = index_.find(e.child);
    auto p = index_.find(e.parent);
    if (c == index_.end() || p == index_.end()) continue;  // reported by integrity_problems
    parents_[c->second].push_back(p->second);
  }

  const std::size_t n = terms_.size();
  closure_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> stack{i};
    while (!stack.empty()) {
      std::size_t cur = stack.back();
      stack.pop_back();
      if (closure_[i][cur]) continue;
      closure_[i][cur] = true;
      for (std::size_t p : parents_[cur]) stack.push_back(p);
    }
  }
}

std::size_t Schema::index_of(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) {
    throw NotFoundError("unknown term '" + std::string(name) + "'");
  }
  return it->second;
}

bool Schema::has_term(std::string_view name) const { return index_.find(name) != index_.end(); }

const TermDef& Schema::term(std::string_view name) const { return terms_[index_of(name)]; }

bool Schema::is_subtype(std::string_view child, std::string_view ancestor) const {
  return closure_[index_of(child)][index_of(ancestor)];
}

std::vector<std::string> Schema::parents(std::string_view name) const {
  std::vector<std::string> out;
  for (std::size_t p : parents_[index_of(name)]) out.push_back(terms_[p].canonical_name);
  return out;
}

std::vector<std::string> Schema::ancestors(std::string_view name) const {
  std::vector<std::string> out;
  std::vector<bool> seen(terms_.size(), false);
  std::deque<std::size_t> queue{index_of(name)};
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    if (seen[cur]) continue;
    seen[cur] = true;
    out.push_back(terms_[cur].canonical_name);
    for (std::size_t p : parents_[cur]) queue.push_back(p);
  }
  return out;
}

std::vector<AttributeDef> Schema::attributes_of(std::string_view term, bool inherited) const {
  std::vector<AttributeDef> out;
  std::set<std::string, std::less<>> names;
  const std::vector<std::string> owners =
      inherited ? ancestors(term) : std::vector<std::string>{terms_[index_of(term)].canonical_name};
  for (const auto& owner : owners) {
    for (const auto& a : attributes_) {
      if (a.owner != owner) continue;
      if (names.insert(a.attr_name).second) out.push_back(a);
    }
  }
  return out;
}

bool Schema::has_attribute(std::string_view term, std::string_view attr_name) const {
  for (const auto& a : attributes_) {
    if (a.attr_name == attr_name && has_term(a.owner) && is_subtype(term, a.owner)) return true;
  }
  return false;
}

bool Schema::is_attribute_name(std::string_view attr_name) const {
  return std::any_of(attributes_.begin(), attributes_.end(),
                     [&](const AttributeDef& a) { return a.attr_name == attr_name; });
}

std::vector<RelationshipDef> Schema::relationship_defs(std::string_view rel_name) const {
  if (rel_name == "*") return relationships_;
  std::vector<RelationshipDef> out;
  std::copy_if(relationships_.begin(), relationships_.end(), std::back_inserter(out),
               [&](const RelationshipDef& r) { return r.rel_name == rel_name; });
  return out;
}

bool Schema::is_relation_name(std::string_view rel_name) const {
  return is_builtin_relation(rel_name) ||
         std::any_of(relationships_.begin(), relationships_.end(),
                     [&](const RelationshipDef& r) { return r.rel_name == rel_name; });
}

bool Schema::is_builtin_relation(std::string_view rel_name) const {
  return std::find(builtin_relations_.begin(), builtin_relations_.end(), rel_name) !=
         builtin_relations_.end();
}

SchemaCounts Schema::counts() const {
  SchemaCounts c;
  for (const auto& t : terms_) {
    switch (t.kind) {
      case TermKind::OwnOrExtended: ++c.own; break;
      case TermKind::Reused: ++c.reused; break;
      case TermKind::ImportedStub: ++c.imported; break;
    }
  }
  for (const auto& a : attributes_) {
    if (has_term(a.owner) && term(a.owner).provenance == Provenance::TestTDO) ++c.attributes;
  }
  c.relationships = relationships_.size();
  return c;
}

std::vector<std::string> integrity_problems(const Schema& schema) {
  std::vector<std::string> problems;
  std::set<std::string> names;
  for (const auto& t : schema.terms()) {
    if (!names.insert(t.canonical_name).second) {
      problems.push_back("duplicate term " + t.canonical_name);
    }
    if (t.kind != TermKind::OwnOrExtended && t.provenance == Provenance::TestTDO) {
      problems.push_back("non-owned term " + t.canonical_name + " has TestTDO provenance");
    }
  }
  auto need = [&](const std::string& name, const std::string& where) {
    if (!schema.has_term(name)) problems.push_back(where + " references unknown term " + name);
  };
  for (const auto& e : schema.taxonomy()) {
    need(e.child, "taxonomy edge");
    need(e.parent, "taxonomy edge");
  }
  std::set<std::pair<std::string, std::string>> attr_keys;
  for (const auto& a : schema.attributes()) {
    need(a.owner, "attribute " + a.attr_name);
    if (!attr_keys.emplace(a.owner, a.attr_name).second) {
      problems.push_back("duplicate attribute " + a.owner + "." + a.attr_name);
    }
  }
  std::set<std::tuple<std::string, std::string, std::string>> rel_keys;
  for (const auto& r : schema.relationships()) {
    need(r.source, "relationship " + r.rel_name);
    need(r.target, "relationship " + r.rel_name);
    if (!rel_keys.emplace(r.rel_name, r.source, r.target).second) {
      problems.push_back("duplicate relationship " + r.rel_name + "(" + r.source + ", " + r.target + ")");
    }
  }
  for (const auto& s : schema.axiom_signatures()) {
    need(s.source, "axiom signature " + s.rel_name);
    need(s.target, "axiom signature " + s.rel_name);
  }
  if (!problems.empty()) return problems;

  // A proper cycle shows up as two distinct terms that are mutual subtypes.
  const auto& terms = schema.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (const auto& parent : schema.parents(terms[i].canonical_name)) {
      if (schema.is_subtype(parent, terms[i].canonical_name)) {
        problems.push_back("taxonomy cycle through " + terms[i].canonical_name);
        break;
      }
    }
  }
  return problems;
}

}  // namespace testtdo
