#pragma once

#include <string>
#include <string_view>

namespace testtdo::catalog {

enum class Format { Text, Json };
enum class SchemaView { Terms, Attributes, Relationships, Counts };

/// Renders a slice of the builtin schema. With `term`, terms shows that one
/// term, attrs its attributes (inherited included) and rels the rows that
/// mention it. Throws NotFoundError for an unknown term.
std::string render_schema(SchemaView view, std::string_view term, Format format);

std::string render_axiom_list(Format format);
/// Throws NotFoundError for an unknown id.
std::string render_axiom(std::string_view id, Format format);

}  // namespace testtdo::catalog
