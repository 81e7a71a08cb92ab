#include "kb.hpp"

namespace testtdo {

namespace {
std::string join_ids(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ", ";
    out += "'" + id + "'";
  }
  return out;
}
}  // namespace

DanglingReferenceError::DanglingReferenceError(std::vector<std::string> ids)
    : std::runtime_error("dangling reference to undeclared " + join_ids(ids)), ids_(std::move(ids)) {}

void KnowledgeBase::add_individual(std::string id, std::string type_name, AttrMap attrs) {
  if (id.empty()) throw std::invalid_argument("individual id must be non-empty");
  if (individuals_.count(id)) throw DuplicateIdError("duplicate individual id '" + id + "'");
  std::string key = id;
  individuals_.emplace(std::move(key), Individual{std::move(id), std::move(type_name), std::move(attrs)});
  finalized_ = false;
}

void KnowledgeBase::add_link(std::string rel_name, std::string source, std::string target) {
  links_.insert(Link{std::move(rel_name), std::move(source), std::move(target)});
  finalized_ = false;
}

void KnowledgeBase::finalize() {
  std::set<std::string> missing;
  for (const auto& l : links_) {
    if (!contains(l.source)) missing.insert(l.source);
    if (!contains(l.target)) missing.insert(l.target);
  }
  if (!missing.empty()) throw DanglingReferenceError({missing.begin(), missing.end()});
  finalized_ = true;
}

bool KnowledgeBase::contains(std::string_view id) const { return individuals_.find(id) != individuals_.end(); }

const Individual& KnowledgeBase::individual(std::string_view id) const {
  auto it = individuals_.find(id);
  if (it == individuals_.end()) throw NotFoundError("unknown individual '" + std::string(id) + "'");
  return it->second;
}

bool KnowledgeBase::has_link(std::string_view rel_name, std::string_view source,
                             std::string_view target) const {
  return links_.count(Link{std::string(rel_name), std::string(source), std::string(target)}) > 0;
}

std::vector<std::string> KnowledgeBase::instances_of(const Schema& schema, std::string_view type_name,
                                                     bool transitive) const {
  (void)schema.term(type_name);  // throws on unknown type
  std::vector<std::string> out;
  for (const auto& [id, ind] : individuals_) {
    if (ind.type_name == type_name) {
      out.push_back(id);
    } else if (transitive && schema.has_term(ind.type_name) && schema.is_subtype(ind.type_name, type_name)) {
      out.push_back(id);
    }
  }
  return out;
}

}  // namespace testtdo
