#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fol.hpp"

namespace testtdo::axioms {

struct AxiomDef {
  std::string id;           // "A1".."A17"
  std::string description;  // verbatim axiom description
  fol::FormulaPtr formula;
  std::vector<std::string> deviations;  // empty when the formula is encoded literally
};

/// The 17 TestTDO axioms in id order.
const std::vector<AxiomDef>& builtin_axioms();

/// Throws NotFoundError for ids outside A1..A17.
const AxiomDef& axiom(std::string_view id);

fol::EvalResult check_axiom(const KnowledgeBase& kb, const Schema& schema, std::string_view id);

/// Deviation note shared by every axiom whose source predicates
/// ExpectedResult/Value are realised as attribute comparisons.
extern const std::string kA11AttributeMapping;

}  // namespace testtdo::axioms
