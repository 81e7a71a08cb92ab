#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "schema.hpp"

namespace testtdo {

class DuplicateIdError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DanglingReferenceError : public std::runtime_error {
 public:
  DanglingReferenceError(std::vector<std::string> ids);
  const std::vector<std::string>& ids() const { return ids_; }

 private:
  std::vector<std::string> ids_;
};

using AttrMap = std::map<std::string, std::string, std::less<>>;

struct Individual {
  std::string id;
  std::string type_name;
  AttrMap attrs;

  friend bool operator==(const Individual&, const Individual&) = default;
};

struct Link {
  std::string rel_name;
  std::string source;
  std::string target;

  friend auto operator<=>(const Link&, const Link&) = default;
};

/// A finite instance model. Individuals are kept ordered by id and links by
/// (rel_name, source, target), so iteration order never depends on
/// insertion order.
class KnowledgeBase {
 public:
  void add_individual(std::string id, std::string type_name, AttrMap attrs = {});
  void add_link(std::string rel_name, std::string source, std::string target);

  /// Checks every link endpoint. Throws DanglingReferenceError listing the
  /// unresolved ids (sorted, unique).
  void finalize();
  bool finalized() const { return finalized_; }

  bool contains(std::string_view id) const;
  /// Throws NotFoundError.
  const Individual& individual(std::string_view id) const;
  const std::map<std::string, Individual, std::less<>>& individuals() const { return individuals_; }
  const std::set<Link>& links() const { return links_; }
  std::size_t size() const { return individuals_.size(); }

  bool has_link(std::string_view rel_name, std::string_view source, std::string_view target) const;

  /// Ids of individuals of `type_name` (transitively through the taxonomy
  /// when `transitive`), ascending. Throws NotFoundError for unknown types.
  std::vector<std::string> instances_of(const Schema& schema, std::string_view type_name,
                                        bool transitive) const;

  friend bool operator==(const KnowledgeBase& a, const KnowledgeBase& b) {
    return a.individuals_ == b.individuals_ && a.links_ == b.links_;
  }

 private:
  std::map<std::string, Individual, std::less<>> individuals_;
  std::set<Link> links_;
  bool finalized_ = false;
};

}  // namespace testtdo
