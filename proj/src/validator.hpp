#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kb.hpp"
#include "schema.hpp"

namespace testtdo::validator {

enum class Severity { Error, Warning };
enum class Mode { Draft, Complete };
enum class Verdict { Pass, Fail };

std::string_view to_string(Severity s);
std::string_view to_string(Mode m);
std::string_view to_string(Verdict v);
/// Accepts "draft" / "complete".
std::optional<Mode> parse_mode(std::string_view text);

// Diagnostic codes.
inline constexpr std::string_view kUnknownType = "E001";
inline constexpr std::string_view kUnknownAttribute = "E002";
inline constexpr std::string_view kUnknownRelationship = "E010";
inline constexpr std::string_view kEndpointMismatch = "E011";
inline constexpr std::string_view kLowerBound = "E020";
inline constexpr std::string_view kLowerBoundDraft = "W020";
inline constexpr std::string_view kUpperBound = "E021";
inline constexpr std::string_view kA1Exclusivity = "W-A1X";

struct Diagnostic {
  std::string code;
  Severity severity = Severity::Error;
  std::string message;
  std::vector<std::string> subjects;
  std::optional<std::string> axiom_id;
  // Variable -> individual id, in the axiom's quantifier order.
  std::optional<std::vector<std::pair<std::string, std::string>>> witness;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct ValidationReport {
  std::vector<Diagnostic> diagnostics;
  std::size_t errors = 0;
  std::size_t warnings = 0;
  Verdict verdict = Verdict::Pass;
  Mode mode = Mode::Complete;
};

/// Catalog order used for sorting: E001 < E002 < E010 < E011 < E020 < E021
/// < W020 < AX-A1 < ... < AX-A17 < W-A1X. Unknown codes sort last.
int code_rank(std::string_view code);
bool diagnostic_less(const Diagnostic& a, const Diagnostic& b);

/// E001, E002, E010, E011 and W-A1X.
std::vector<Diagnostic> check_structure(const KnowledgeBase& kb, const Schema& schema);

/// E020/W020 and E021 compiled from the relationship rows. part_of and other
/// builtin relations are exempt.
std::vector<Diagnostic> check_cardinalities(const KnowledgeBase& kb, const Schema& schema, Mode mode);

/// One AX-A<n> diagnostic per violated axiom, carrying its witness.
std::vector<Diagnostic> check_axioms(const KnowledgeBase& kb, const Schema& schema);

/// Runs every check family and assembles a sorted report.
ValidationReport validate(const KnowledgeBase& kb, const Schema& schema, Mode mode);

std::string render_text(const ValidationReport& report);
/// Stable key order: verdict, mode, counts, diagnostics.
std::string render_json(const ValidationReport& report);

}  // namespace testtdo::validator
