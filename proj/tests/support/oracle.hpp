#pragma once

// Brute-force reference evaluator. Deliberately naive: every quantifier walks
// the whole universe in id order, bindings are plain string maps, and no
// formula is compiled or reordered. Used to cross-check fol::Evaluator.

#include <optional>

#include "fol.hpp"

namespace oracle {

using testtdo::fol::Binding;

bool eval(const testtdo::KnowledgeBase& kb, const testtdo::Schema& schema, const testtdo::fol::Formula& f,
          const Binding& env = {});

struct Result {
  bool value = false;
  std::optional<Binding> witness;
};

/// Witness rules: a false top-level forall yields its first falsifying
/// binding, a true top-level exists its first satisfying one, nested loops
/// over the quantifier's variables with ids ascending.
Result eval_with_witness(const testtdo::KnowledgeBase& kb, const testtdo::Schema& schema,
                         const testtdo::fol::Formula& f);

}  // namespace oracle
