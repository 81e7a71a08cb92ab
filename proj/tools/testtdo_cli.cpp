// testtdo command-line tool. Talks to the library through the C API only.
#include <testtdo/testtdo.h>

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

enum Exit { kOk = 0, kFindings = 1, kUsage = 2 };

struct StringDeleter {
  void operator()(char* s) const { ttdo_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct KbDeleter {
  void operator()(ttdo_kb* kb) const { ttdo_kb_free(kb); }
};
using KbPtr = std::unique_ptr<ttdo_kb, KbDeleter>;

struct ReportDeleter {
  void operator()(ttdo_report* r) const { ttdo_report_free(r); }
};
using ReportPtr = std::unique_ptr<ttdo_report, ReportDeleter>;

int tool_error(const std::string& message) {
  std::cerr << "testtdo: " << message << "\n";
  return kUsage;
}

int api_error(const char* what) { return tool_error(std::string(what) + ": " + ttdo_last_error()); }

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buf.str();
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out << text;
  out.flush();
  return static_cast<bool>(out);
}

// Loads and parses a .tkb file. Parse diagnostics go to stderr, prefixed with
// the path.
std::optional<KbPtr> load_kb(const std::string& path, int& exit_code) {
  const auto text = read_file(path);
  if (!text) {
    exit_code = tool_error("cannot read '" + path + "'");
    return std::nullopt;
  }
  ttdo_kb* raw = nullptr;
  char* diags = nullptr;
  const auto status = ttdo_kb_parse(text->data(), text->size(), &raw, &diags);
  OwnedString owned_diags(diags);
  if (status == TTDO_ERR_PARSE) {
    std::istringstream lines(diags == nullptr ? "" : diags);
    for (std::string line; std::getline(lines, line);) std::cerr << path << ":" << line << "\n";
    exit_code = kUsage;
    return std::nullopt;
  }
  if (status != TTDO_OK) {
    exit_code = api_error("parse");
    return std::nullopt;
  }
  return KbPtr(raw);
}

ttdo_format format_of(const std::string& f) { return f == "json" ? TTDO_FORMAT_JSON : TTDO_FORMAT_TEXT; }

// Runs a renderer that fills a char** and prints the result.
template <typename Render>
int emit(Render render, const char* what) {
  char* text = nullptr;
  const ttdo_status status = render(&text);
  OwnedString owned(text);
  if (status != TTDO_OK) return api_error(what);
  std::cout << text;
  return kOk;
}

int cmd_validate(const std::string& path, const std::string& mode, const std::string& format,
                 const std::string& fail_on) {
  int code = kOk;
  auto kb = load_kb(path, code);
  if (!kb) return code;
  ttdo_report* raw = nullptr;
  if (ttdo_validate(kb->get(), mode == "draft" ? TTDO_MODE_DRAFT : TTDO_MODE_COMPLETE, &raw) != TTDO_OK)
    return api_error("validate");
  ReportPtr report(raw);
  const auto render = [&](char** out) { return ttdo_report_render(report.get(), format_of(format), out); };
  if (const int rc = emit(render, "render"); rc != kOk) return rc;
  const std::size_t errors = ttdo_report_error_count(report.get());
  const std::size_t warnings = ttdo_report_warning_count(report.get());
  const bool failed = fail_on == "warning" ? errors + warnings > 0 : errors > 0;
  return failed ? kFindings : kOk;
}

int cmd_schema(const std::string& view, const std::string& term, const std::string& format) {
  ttdo_schema_view v = TTDO_SCHEMA_COUNTS;
  if (view == "terms") v = TTDO_SCHEMA_TERMS;
  else if (view == "attrs") v = TTDO_SCHEMA_ATTRS;
  else if (view == "rels") v = TTDO_SCHEMA_RELS;
  return emit([&](char** out) { return ttdo_schema_render(v, term.c_str(), format_of(format), out); }, "schema");
}

int cmd_axioms(const std::string& action, const std::string& id, const std::string& format) {
  if (action == "list") return emit([&](char** out) { return ttdo_axioms_render_list(format_of(format), out); }, "axioms");
  if (id.empty()) return tool_error("axioms show: missing axiom id");
  return emit([&](char** out) { return ttdo_axiom_render(id.c_str(), format_of(format), out); }, "axioms");
}

int cmd_generate(std::uint64_t seed, std::int64_t size, const std::string& out_path) {
  if (size < 0) return tool_error("generate: --size must be non-negative");
  ttdo_kb* raw = nullptr;
  if (ttdo_kb_generate(seed, static_cast<std::size_t>(size), &raw) != TTDO_OK) return api_error("generate");
  KbPtr kb(raw);
  char* text = nullptr;
  if (ttdo_kb_serialize(kb.get(), &text) != TTDO_OK) return api_error("serialize");
  OwnedString owned(text);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return kOk;
  }
  if (!write_file(out_path, text)) return tool_error("cannot write '" + out_path + "'");
  return kOk;
}

int cmd_fmt(const std::string& path) {
  int code = kOk;
  auto kb = load_kb(path, code);
  if (!kb) return code;
  char* text = nullptr;
  if (ttdo_kb_serialize(kb->get(), &text) != TTDO_OK) return api_error("serialize");
  OwnedString owned(text);
  if (!write_file(path, text)) return tool_error("cannot write '" + path + "'");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Validate, inspect and generate TestTDO knowledge bases", "testtdo"};
  app.require_subcommand(1);

  std::string file, mode = "complete", format = "text", fail_on = "error";
  auto* validate = app.add_subcommand("validate", "Validate a .tkb file");
  validate->add_option("file", file, "Input .tkb file")->required();
  validate->add_option("--mode", mode, "draft or complete")->check(CLI::IsMember({"draft", "complete"}));
  validate->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  validate->add_option("--fail-on", fail_on, "warning or error")->check(CLI::IsMember({"warning", "error"}));

  std::string view, term;
  auto* schema = app.add_subcommand("schema", "Show the builtin schema");
  schema->add_option("view", view, "terms, attrs, rels or counts")
      ->required()
      ->check(CLI::IsMember({"terms", "attrs", "rels", "counts"}));
  schema->add_option("--term", term, "Restrict to one term");
  schema->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string action, axiom_id;
  auto* axioms = app.add_subcommand("axioms", "List or show axioms");
  axioms->add_option("action", action, "list or show")->required()->check(CLI::IsMember({"list", "show"}));
  axioms->add_option("id", axiom_id, "Axiom id, e.g. A10");
  axioms->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::uint64_t seed = 0;
  std::int64_t size = 0;
  std::string out_path;
  auto* generate = app.add_subcommand("generate", "Generate a conforming knowledge base");
  generate->add_option("--seed", seed, "RNG seed");
  generate->add_option("--size", size, "Target number of individuals");
  generate->add_option("-o,--output", out_path, "Output file (default: stdout)");

  auto* fmt = app.add_subcommand("fmt", "Rewrite a .tkb file in canonical form");
  fmt->add_option("file", file, "File to format")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (validate->parsed()) return cmd_validate(file, mode, format, fail_on);
  if (schema->parsed()) return cmd_schema(view, term, format);
  if (axioms->parsed()) return cmd_axioms(action, axiom_id, format);
  if (generate->parsed()) return cmd_generate(seed, size, out_path);
  if (fmt->parsed()) return cmd_fmt(file);
  return kUsage;
}
