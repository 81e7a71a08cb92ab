#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "kb.hpp"

namespace testtdo::generator {

/// Raised by perturb() when the requested violation cannot be injected into
/// the given KB with a single edit.
class NotApplicableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxSize = 10000;

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t size = 0;  // target individual count, <= kMaxSize
};

enum class PerturbFamily { CardinalityLower, CardinalityUpper, Axiom };

struct PerturbKind {
  PerturbFamily family = PerturbFamily::CardinalityLower;
  std::string axiom_id;  // "A1".."A17" when family == Axiom

  static PerturbKind lower() { return {PerturbFamily::CardinalityLower, {}}; }
  static PerturbKind upper() { return {PerturbFamily::CardinalityUpper, {}}; }
  static PerturbKind axiom(std::string id) { return {PerturbFamily::Axiom, std::move(id)}; }
};

/// Number of individuals in the fixed minimal motif (size = 0).
std::size_t motif_size();

/// A KB that passes complete-mode validation. Sizes below motif_size()
/// yield the motif itself; larger sizes land within +/-20% of the request.
/// Throws std::invalid_argument when size exceeds kMaxSize.
KnowledgeBase generate_conforming(const GenConfig& config);

/// Applies one edit to a conforming KB so that validation reports the
/// targeted family (E020, E021 or exactly AX-<id> among axiom findings).
/// Throws NotApplicableError when no such edit exists, and
/// std::invalid_argument for unknown axiom ids.
KnowledgeBase perturb(const KnowledgeBase& kb, std::uint64_t seed, const PerturbKind& kind);

}  // namespace testtdo::generator
