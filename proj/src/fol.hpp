#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kb.hpp"
#include "schema.hpp"

namespace testtdo::fol {

/// Raised for formulas that are not well-formed: an unbound variable, or a
/// type, relation, attribute or tag name that does not resolve.
class FormulaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Attribute on a Testable Entity individual that carries its dynamic
/// classification tags, comma separated.
inline constexpr std::string_view kClassificationAttr = "classification";
const std::vector<std::string>& classification_tags();
/// Splits a classification value into trimmed tokens (empty tokens dropped).
std::vector<std::string> split_tags(std::string_view value);

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct AttrRef {
  std::string var;
  std::string attr;
};

struct Forall {
  std::vector<std::string> vars;
  FormulaPtr body;
};
struct Exists {
  std::vector<std::string> vars;
  FormulaPtr body;
};
struct And {
  std::vector<FormulaPtr> items;
};
struct Or {
  std::vector<FormulaPtr> items;
};
struct Not {
  FormulaPtr item;
};
struct Implies {
  FormulaPtr lhs, rhs;
};
struct Iff {
  FormulaPtr lhs, rhs;
};
struct Is {
  std::string type_name;
  std::string var;
};
struct LinkAtom {
  std::string rel_name;
  std::string source, target;
};
struct AttrEq {
  AttrRef lhs, rhs;
};
struct AttrNeq {
  AttrRef lhs, rhs;
};
struct VarNeq {
  std::string lhs, rhs;
};
struct Tag {
  std::string tag_name;
  std::string var;
};

struct Formula {
  std::variant<Forall, Exists, And, Or, Not, Implies, Iff, Is, LinkAtom, AttrEq, AttrNeq, VarNeq, Tag> node;
};

// Builders.
FormulaPtr forall(std::vector<std::string> vars, FormulaPtr body);
FormulaPtr exists(std::vector<std::string> vars, FormulaPtr body);
FormulaPtr all_of(std::vector<FormulaPtr> items);
FormulaPtr any_of(std::vector<FormulaPtr> items);
FormulaPtr negate(FormulaPtr item);
FormulaPtr implies(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr iff(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr is(std::string type_name, std::string var);
FormulaPtr link(std::string rel_name, std::string source, std::string target);
FormulaPtr attr_eq(AttrRef lhs, AttrRef rhs);
FormulaPtr attr_neq(AttrRef lhs, AttrRef rhs);
FormulaPtr var_neq(std::string lhs, std::string rhs);
FormulaPtr tag(std::string tag_name, std::string var);

/// Variable name -> individual id.
using Binding = std::map<std::string, std::string, std::less<>>;

struct EvalResult {
  bool value = false;
  std::optional<Binding> witness;

  friend bool operator==(const EvalResult&, const EvalResult&) = default;
};

/// Throws FormulaError when `f` is not well-formed against `schema`.
/// Variables listed in `free_vars` count as bound.
void check_well_formed(const Formula& f, const Schema& schema, const std::vector<std::string>& free_vars = {});

/// Prefix (s-expression) rendering, e.g.
/// (forall (p) (implies (is Testing p) ...)).
std::string to_string(const Formula& f);

std::size_t depth(const Formula& f);

/// Closed-world evaluator over one finalized KnowledgeBase. Construction
/// indexes types, links and attributes; evaluation is const and may run
/// concurrently.
class Evaluator {
 public:
  Evaluator(const KnowledgeBase& kb, const Schema& schema);
  ~Evaluator();
  Evaluator(const Evaluator&) = delete;
  Evaluator& operator=(const Evaluator&) = delete;

  bool evaluate(const Formula& f, const Binding& env = {}) const;

  /// Witness for a top-level Forall that is false (first falsifying binding
  /// of its variables) or a top-level Exists that is true (first satisfying
  /// binding). "First" is lexicographic by (variable order, individual id).
  EvalResult evaluate_with_witness(const Formula& f) const;

  struct Index;  // defined in fol.cpp

 private:
  std::unique_ptr<Index> index_;
};

bool evaluate(const KnowledgeBase& kb, const Schema& schema, const Formula& f);
EvalResult evaluate_with_witness(const KnowledgeBase& kb, const Schema& schema, const Formula& f);

}  // namespace testtdo::fol
