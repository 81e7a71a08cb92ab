#include <doctest.h>

#include <testtdo/testtdo.h>

#include <string>

namespace {

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  ttdo_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("parse, validate, render") {
  const std::string doc = "individual tp : TestProject\n";
  ttdo_kb* kb = nullptr;
  char* diags = nullptr;
  REQUIRE(ttdo_kb_parse(doc.data(), doc.size(), &kb, &diags) == TTDO_OK);
  CHECK(diags == nullptr);
  CHECK(ttdo_kb_individual_count(kb) == 1);

  ttdo_report* report = nullptr;
  REQUIRE(ttdo_validate(kb, TTDO_MODE_COMPLETE, &report) == TTDO_OK);
  CHECK(ttdo_report_verdict(report) == TTDO_VERDICT_FAIL);
  CHECK(ttdo_report_error_count(report) == 4);
  CHECK(ttdo_report_diagnostic_count(report) == 4);
  CHECK(std::string(ttdo_report_diagnostic_code(report, 0)) == "E020");
  CHECK(ttdo_report_diagnostic_code(report, 4) == nullptr);

  char* text = nullptr;
  REQUIRE(ttdo_report_render(report, TTDO_FORMAT_TEXT, &text) == TTDO_OK);
  CHECK(take(text).find("verdict: fail") != std::string::npos);
  REQUIRE(ttdo_report_render(report, TTDO_FORMAT_JSON, &text) == TTDO_OK);
  CHECK(take(text).find("\"verdict\": \"fail\"") != std::string::npos);
  ttdo_report_free(report);

  REQUIRE(ttdo_validate(kb, TTDO_MODE_DRAFT, &report) == TTDO_OK);
  CHECK(ttdo_report_verdict(report) == TTDO_VERDICT_PASS);
  CHECK(ttdo_report_warning_count(report) == 4);
  ttdo_report_free(report);
  ttdo_kb_free(kb);
}

TEST_CASE("parse errors") {
  const std::string doc = "link produces(prt1, tc1)\n";
  ttdo_kb* kb = nullptr;
  char* diags = nullptr;
  CHECK(ttdo_kb_parse(doc.data(), doc.size(), &kb, &diags) == TTDO_ERR_PARSE);
  CHECK(kb == nullptr);
  CHECK(take(diags) == "1:15: error: unresolved identifier 'prt1'\n1:21: error: unresolved identifier 'tc1'\n");
  CHECK(std::string(ttdo_last_error()) == "2 parse errors");
}

TEST_CASE("generate, serialize, perturb") {
  ttdo_kb* kb = nullptr;
  REQUIRE(ttdo_kb_generate(1, 10, &kb) == TTDO_OK);
  char* text = nullptr;
  REQUIRE(ttdo_kb_serialize(kb, &text) == TTDO_OK);
  const std::string doc = take(text);
  CHECK_FALSE(doc.empty());

  ttdo_kb* bad = nullptr;
  REQUIRE(ttdo_kb_perturb(kb, 7, TTDO_PERTURB_AXIOM, "A7", &bad) == TTDO_OK);
  ttdo_report* report = nullptr;
  REQUIRE(ttdo_validate(bad, TTDO_MODE_COMPLETE, &report) == TTDO_OK);
  CHECK(ttdo_report_verdict(report) == TTDO_VERDICT_FAIL);
  ttdo_report_free(report);
  ttdo_kb_free(bad);

  CHECK(ttdo_kb_perturb(kb, 7, TTDO_PERTURB_AXIOM, "A0", &bad) == TTDO_ERR_INVALID_ARGUMENT);
  CHECK(ttdo_kb_generate(1, 20000, &bad) == TTDO_ERR_INVALID_ARGUMENT);
  ttdo_kb_free(kb);

  ttdo_kb* empty = nullptr;
  REQUIRE(ttdo_kb_parse("", 0, &empty, nullptr) == TTDO_OK);
  CHECK(ttdo_kb_perturb(empty, 1, TTDO_PERTURB_CARDINALITY_UPPER, nullptr, &bad) == TTDO_ERR_NOT_APPLICABLE);
  ttdo_kb_free(empty);
}

TEST_CASE("schema and axioms") {
  char* text = nullptr;
  REQUIRE(ttdo_schema_render(TTDO_SCHEMA_COUNTS, nullptr, TTDO_FORMAT_TEXT, &text) == TTDO_OK);
  CHECK(take(text) == "own=44 reused=4 attributes=51 relationships=43 axioms=17\n");
  CHECK(ttdo_schema_render(TTDO_SCHEMA_TERMS, "Nope", TTDO_FORMAT_TEXT, &text) == TTDO_ERR_NOT_FOUND);
  CHECK(text == nullptr);
  CHECK(std::string(ttdo_last_error()).find("Nope") != std::string::npos);
  REQUIRE(ttdo_axioms_render_list(TTDO_FORMAT_JSON, &text) == TTDO_OK);
  CHECK(take(text).find("\"A17\"") != std::string::npos);
  CHECK(ttdo_axiom_render("A0", TTDO_FORMAT_TEXT, &text) == TTDO_ERR_NOT_FOUND);
  REQUIRE(ttdo_axiom_render("A10", TTDO_FORMAT_TEXT, &text) == TTDO_OK);
  CHECK(take(text).find("Negation scope") != std::string::npos);
}

TEST_CASE("null arguments") {
  CHECK(ttdo_kb_parse("x", 1, nullptr, nullptr) == TTDO_ERR_INVALID_ARGUMENT);
  CHECK(ttdo_validate(nullptr, TTDO_MODE_DRAFT, nullptr) == TTDO_ERR_INVALID_ARGUMENT);
  CHECK(ttdo_kb_individual_count(nullptr) == 0);
  ttdo_kb_free(nullptr);
  ttdo_report_free(nullptr);
  ttdo_string_free(nullptr);
}
