#include "testtdo/testtdo.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "catalog.hpp"
#include "generator.hpp"
#include "kb.hpp"
#include "schema.hpp"
#include "tkb.hpp"
#include "validator.hpp"

struct ttdo_kb {
  testtdo::KnowledgeBase kb;
};

struct ttdo_report {
  testtdo::validator::ValidationReport report;
};

namespace {

thread_local std::string last_error;

ttdo_status fail(ttdo_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

testtdo::catalog::Format to_format(ttdo_format f) {
  return f == TTDO_FORMAT_JSON ? testtdo::catalog::Format::Json : testtdo::catalog::Format::Text;
}

// Maps core exceptions onto status codes. The order of the catch clauses
// matters: NotFoundError and friends derive from runtime_error.
template <typename F>
ttdo_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return TTDO_OK;
  } catch (const testtdo::NotFoundError& e) {
    return fail(TTDO_ERR_NOT_FOUND, e.what());
  } catch (const testtdo::generator::NotApplicableError& e) {
    return fail(TTDO_ERR_NOT_APPLICABLE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(TTDO_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(TTDO_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TTDO_ERR_INTERNAL, "unknown error");
  }
}

#define TTDO_REQUIRE(cond) \
  if (!(cond)) return fail(TTDO_ERR_INVALID_ARGUMENT, "invalid argument: " #cond)

}  // namespace

extern "C" {

const char* ttdo_last_error(void) { return last_error.c_str(); }

void ttdo_string_free(char* s) { std::free(s); }

ttdo_status ttdo_kb_parse(const char* text, size_t len, ttdo_kb** out, char** diagnostics) {
  TTDO_REQUIRE(out != nullptr);
  TTDO_REQUIRE(text != nullptr || len == 0);
  *out = nullptr;
  if (diagnostics != nullptr) *diagnostics = nullptr;
  bool parse_failed = false;
  const auto status = guarded([&] {
    auto result = testtdo::tkb::parse(std::string_view(text == nullptr ? "" : text, len));
    if (!result.ok()) {
      std::string all;
      for (const auto& d : result.diagnostics) all += testtdo::tkb::format_diagnostic(d, "") + "\n";
      if (diagnostics != nullptr) *diagnostics = dup(all);
      parse_failed = true;
      last_error = result.diagnostics.size() == 1 ? "1 parse error"
                                                  : std::to_string(result.diagnostics.size()) + " parse errors";
      return;
    }
    *out = new ttdo_kb{std::move(*result.kb)};
  });
  if (status == TTDO_OK && parse_failed) return TTDO_ERR_PARSE;
  return status;
}

ttdo_status ttdo_kb_generate(uint64_t seed, size_t size, ttdo_kb** out) {
  TTDO_REQUIRE(out != nullptr);
  *out = nullptr;
  return guarded([&] { *out = new ttdo_kb{testtdo::generator::generate_conforming({seed, size})}; });
}

ttdo_status ttdo_kb_perturb(const ttdo_kb* kb, uint64_t seed, ttdo_perturb_family family, const char* axiom_id,
                            ttdo_kb** out) {
  TTDO_REQUIRE(kb != nullptr && out != nullptr);
  *out = nullptr;
  using testtdo::generator::PerturbKind;
  PerturbKind kind;
  switch (family) {
    case TTDO_PERTURB_CARDINALITY_LOWER: kind = PerturbKind::lower(); break;
    case TTDO_PERTURB_CARDINALITY_UPPER: kind = PerturbKind::upper(); break;
    case TTDO_PERTURB_AXIOM:
      TTDO_REQUIRE(axiom_id != nullptr);
      kind = PerturbKind::axiom(axiom_id);
      break;
    default: return fail(TTDO_ERR_INVALID_ARGUMENT, "unknown perturbation family");
  }
  return guarded([&] { *out = new ttdo_kb{testtdo::generator::perturb(kb->kb, seed, kind)}; });
}

ttdo_status ttdo_kb_serialize(const ttdo_kb* kb, char** out) {
  TTDO_REQUIRE(kb != nullptr && out != nullptr);
  *out = nullptr;
  return guarded([&] { *out = dup(testtdo::tkb::serialize(kb->kb)); });
}

size_t ttdo_kb_individual_count(const ttdo_kb* kb) { return kb == nullptr ? 0 : kb->kb.individuals().size(); }

size_t ttdo_kb_link_count(const ttdo_kb* kb) { return kb == nullptr ? 0 : kb->kb.links().size(); }

void ttdo_kb_free(ttdo_kb* kb) { delete kb; }

ttdo_status ttdo_validate(const ttdo_kb* kb, ttdo_mode mode, ttdo_report** out) {
  TTDO_REQUIRE(kb != nullptr && out != nullptr);
  TTDO_REQUIRE(mode == TTDO_MODE_DRAFT || mode == TTDO_MODE_COMPLETE);
  *out = nullptr;
  const auto m = mode == TTDO_MODE_DRAFT ? testtdo::validator::Mode::Draft : testtdo::validator::Mode::Complete;
  return guarded(
      [&] { *out = new ttdo_report{testtdo::validator::validate(kb->kb, testtdo::builtin_schema(), m)}; });
}

ttdo_verdict ttdo_report_verdict(const ttdo_report* report) {
  return report == nullptr || report->report.verdict == testtdo::validator::Verdict::Fail ? TTDO_VERDICT_FAIL
                                                                                         : TTDO_VERDICT_PASS;
}

size_t ttdo_report_error_count(const ttdo_report* report) { return report == nullptr ? 0 : report->report.errors; }

size_t ttdo_report_warning_count(const ttdo_report* report) {
  return report == nullptr ? 0 : report->report.warnings;
}

size_t ttdo_report_diagnostic_count(const ttdo_report* report) {
  return report == nullptr ? 0 : report->report.diagnostics.size();
}

const char* ttdo_report_diagnostic_code(const ttdo_report* report, size_t i) {
  if (report == nullptr || i >= report->report.diagnostics.size()) return nullptr;
  return report->report.diagnostics[i].code.c_str();
}

ttdo_status ttdo_report_render(const ttdo_report* report, ttdo_format format, char** out) {
  TTDO_REQUIRE(report != nullptr && out != nullptr);
  *out = nullptr;
  return guarded([&] {
    *out = dup(format == TTDO_FORMAT_JSON ? testtdo::validator::render_json(report->report)
                                          : testtdo::validator::render_text(report->report));
  });
}

void ttdo_report_free(ttdo_report* report) { delete report; }

ttdo_status ttdo_schema_render(ttdo_schema_view view, const char* term, ttdo_format format, char** out) {
  TTDO_REQUIRE(out != nullptr);
  *out = nullptr;
  using testtdo::catalog::SchemaView;
  SchemaView v;
  switch (view) {
    case TTDO_SCHEMA_TERMS: v = SchemaView::Terms; break;
    case TTDO_SCHEMA_ATTRS: v = SchemaView::Attributes; break;
    case TTDO_SCHEMA_RELS: v = SchemaView::Relationships; break;
    case TTDO_SCHEMA_COUNTS: v = SchemaView::Counts; break;
    default: return fail(TTDO_ERR_INVALID_ARGUMENT, "unknown schema view");
  }
  return guarded([&] { *out = dup(testtdo::catalog::render_schema(v, term == nullptr ? "" : term, to_format(format))); });
}

ttdo_status ttdo_axioms_render_list(ttdo_format format, char** out) {
  TTDO_REQUIRE(out != nullptr);
  *out = nullptr;
  return guarded([&] { *out = dup(testtdo::catalog::render_axiom_list(to_format(format))); });
}

ttdo_status ttdo_axiom_render(const char* id, ttdo_format format, char** out) {
  TTDO_REQUIRE(id != nullptr && out != nullptr);
  *out = nullptr;
  return guarded([&] { *out = dup(testtdo::catalog::render_axiom(id, to_format(format))); });
}

}  // extern "C"
