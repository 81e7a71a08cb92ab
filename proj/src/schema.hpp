#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace testtdo {

/// Raised when a term, axiom, or other catalog entry is looked up by a name
/// that does not exist.
class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Provenance { TestTDO, TFO, SCO, ProcCO, ProjCO, GCO, NFRsTDO, FRsTDO };
enum class TermKind { OwnOrExtended, Reused, ImportedStub };

std::string_view to_string(Provenance p);
std::string_view to_string(TermKind k);

struct TermDef {
  std::string canonical_name;
  std::string display_name;
  std::vector<std::string> synonyms;
  std::string definition;
  Provenance provenance = Provenance::TestTDO;
  TermKind kind = TermKind::OwnOrExtended;
};

struct TaxonomyEdge {
  std::string child;
  std::string parent;
};

struct AttributeDef {
  std::string owner;
  std::string attr_name;
  std::string definition;
};

/// Upper bound of a multiplicity; nullopt means unbounded ("*").
using Bound = std::optional<std::size_t>;

struct Multiplicity {
  std::size_t min = 0;
  Bound max;

  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;
};

std::string to_string(const Multiplicity& m);

struct RelationshipDef {
  std::string rel_name;
  std::string source;
  std::string target;
  // How many sources may point at one target. Only rows whose prose states
  // the inverse direction carry a non-trivial lower bound here.
  Multiplicity source_mult;
  // How many targets one source may point at.
  Multiplicity target_mult;
  std::string definition;
};

/// Endpoint signature that is not a relationship row but is demanded by an
/// axiom consequent (e.g. an activity that requires a Testable Entity as
/// input). Accepted by link conformance; never subject to cardinality.
struct LinkSignature {
  std::string rel_name;
  std::string source;
  std::string target;
};

struct SchemaCounts {
  std::size_t own = 0;
  std::size_t reused = 0;
  std::size_t imported = 0;
  std::size_t attributes = 0;
  std::size_t relationships = 0;
};

/// The TestTDO v1.3 metamodel. Immutable once built; all queries are const.
class Schema {
 public:
  Schema(std::vector<TermDef> terms, std::vector<TaxonomyEdge> taxonomy,
         std::vector<AttributeDef> attributes,
         std::vector<RelationshipDef> relationships,
         std::vector<LinkSignature> axiom_signatures,
         std::vector<std::string> builtin_relations);

  const std::vector<TermDef>& terms() const { return terms_; }
  const std::vector<TaxonomyEdge>& taxonomy() const { return taxonomy_; }
  const std::vector<AttributeDef>& attributes() const { return attributes_; }
  const std::vector<RelationshipDef>& relationships() const { return relationships_; }
  const std::vector<LinkSignature>& axiom_signatures() const { return axiom_signatures_; }
  const std::vector<std::string>& builtin_relations() const { return builtin_relations_; }

  bool has_term(std::string_view name) const;
  /// Throws NotFoundError for unknown names.
  const TermDef& term(std::string_view name) const;

  bool is_subtype(std::string_view child, std::string_view ancestor) const;
  /// Reflexive-transitive ancestors of `name`, ordered most-derived first
  /// (breadth-first over parent edges).
  std::vector<std::string> ancestors(std::string_view name) const;
  std::vector<std::string> parents(std::string_view name) const;

  std::vector<AttributeDef> attributes_of(std::string_view term, bool inherited) const;
  /// Attribute defined on the term or any ancestor.
  bool has_attribute(std::string_view term, std::string_view attr_name) const;
  bool is_attribute_name(std::string_view attr_name) const;

  /// "*" returns every row.
  std::vector<RelationshipDef> relationship_defs(std::string_view rel_name) const;
  bool is_relation_name(std::string_view rel_name) const;
  bool is_builtin_relation(std::string_view rel_name) const;

  SchemaCounts counts() const;

 private:
  std::size_t index_of(std::string_view name) const;

  std::vector<TermDef> terms_;
  std::vector<TaxonomyEdge> taxonomy_;
  std::vector<AttributeDef> attributes_;
  std::vector<RelationshipDef> relationships_;
  std::vector<LinkSignature> axiom_signatures_;
  std::vector<std::string> builtin_relations_;

  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<std::vector<std::size_t>> parents_;
  // closure_[i] holds every j with is_subtype(i, j).
  std::vector<std::vector<bool>> closure_;
};

/// The compiled-in TestTDO v1.3 schema. Built once and self-checked; a
/// failed self-check aborts with SchemaIntegrityError.
const Schema& builtin_schema();

class SchemaIntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Structural checks shared by the startup self-check and the tests:
/// unique names, closed references, acyclic taxonomy. Returns one message
/// per problem.
std::vector<std::string> integrity_problems(const Schema& schema);

}  // namespace testtdo
