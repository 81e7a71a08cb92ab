#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kb.hpp"

namespace testtdo::tkb {

/// Positions are 1-based; columns count bytes.
struct ParseDiagnostic {
  std::size_t line = 1;
  std::size_t column = 1;
  std::string message;

  friend bool operator==(const ParseDiagnostic&, const ParseDiagnostic&) = default;
};

struct ParseResult {
  std::optional<KnowledgeBase> kb;  // finalized; empty when diagnostics exist
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return kb.has_value(); }
};

/// Parses a TKB document:
///
///   individual tc1 : TestCase { expected_result = "200 OK" }
///   link produces(prt1, tc1)   # links may precede the declarations they use
///
/// Errors do not stop the parse; after a diagnostic the parser resumes at
/// the next statement keyword.
ParseResult parse(std::string_view text);

/// Canonical rendering: individuals by id, attributes by name, links by
/// (rel_name, source, target). parse(serialize(kb)) == kb.
std::string serialize(const KnowledgeBase& kb);

std::string format_diagnostic(const ParseDiagnostic& d, std::string_view file = {});

}  // namespace testtdo::tkb
