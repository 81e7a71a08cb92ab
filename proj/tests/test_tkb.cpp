#include <doctest.h>

#include <algorithm>
#include <random>

#include "generator.hpp"
#include "tkb.hpp"

using namespace testtdo;

namespace {

KnowledgeBase parse_ok(std::string_view text) {
  auto r = tkb::parse(text);
  INFO((r.diagnostics.empty() ? std::string() : tkb::format_diagnostic(r.diagnostics.front())));
  REQUIRE(r.ok());
  return *r.kb;
}

std::vector<std::string> messages(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& d : tkb::parse(text).diagnostics) out.push_back(d.message);
  return out;
}

}  // namespace

TEST_CASE("empty document") {
  const auto kb = parse_ok("");
  CHECK(kb.size() == 0);
  CHECK(kb.links().empty());
  CHECK(tkb::serialize(kb).empty());
  CHECK(parse_ok("  # only a comment\n\n").size() == 0);
}

TEST_CASE("unresolved link endpoint") {
  const auto r = tkb::parse("individual tc1 : TestCase { expected_result = \"200 OK\" }\nlink produces(prt1, tc1)");
  REQUIRE_FALSE(r.ok());
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].message == "unresolved identifier 'prt1'");
  CHECK(r.diagnostics[0].line == 2);
  CHECK(r.diagnostics[0].column == 15);
  CHECK(tkb::format_diagnostic(r.diagnostics[0], "f.tkb") == "f.tkb:2:15: error: unresolved identifier 'prt1'");
}

TEST_CASE("A2 motif document") {
  const auto kb = parse_ok(R"(
individual t : Testing
individual a1 : DesignTesting
individual a2 : PerformTesting
individual a3 : AnalyzeTestResults
link part_of(a1, t)
link part_of(a2, t)
link part_of(a3, t)
)");
  CHECK(kb.size() == 4);
  CHECK(kb.links().size() == 3);
}

TEST_CASE("links may precede declarations") {
  const auto kb = parse_ok("link part_of(a, b)\nindividual a : TestCase\nindividual b : TestSuite\n");
  CHECK(kb.has_link("part_of", "a", "b"));
}

TEST_CASE("attributes and escapes") {
  const auto kb = parse_ok("individual tc : TestCase {\n  input = \"say \\\"hi\\\"\\n\\\\\"\n  name = \"\" }\r\n");
  CHECK(kb.individual("tc").attrs.at("input") == "say \"hi\"\n\\");
  CHECK(kb.individual("tc").attrs.at("name").empty());
}

TEST_CASE("error recovery keeps going") {
  const auto msgs = messages(
      "individual a : TestCase { input = \"x\" input = \"y\" }\n"
      "frobnicate a\n"
      "individual a : TestSuite\n"
      "link part_of(a b)\n"
      "individual c : TestCase { name = \"bad \\q\" }\n");
  CHECK(msgs == std::vector<std::string>{"duplicate attribute 'input'", "unknown statement keyword 'frobnicate'",
                                         "duplicate individual id 'a'", "expected ','",
                                         "invalid escape sequence '\\q'"});
}

TEST_CASE("lexical errors") {
  CHECK(messages("individual a : TestCase { name = \"open\n}") ==
        std::vector<std::string>{"unterminated string literal"});
  CHECK(messages("individual a : Test$Case") == std::vector<std::string>{"unexpected character '$'"});
  CHECK(messages("\xEF\xBB\xBFindividual a : TestCase") ==
        std::vector<std::string>{"byte order mark is not allowed"});
  CHECK_FALSE(tkb::parse("individual \xC3\xA9 : TestCase").ok());
  CHECK(tkb::parse("individual a : TestCase { name = \"caf\xC3\xA9\" }").ok());
}

TEST_CASE("diagnostics are ordered by position") {
  const auto r = tkb::parse("link r(x, y)\nindividual ? : T\n");
  REQUIRE(r.diagnostics.size() == 3);
  for (std::size_t i = 1; i < r.diagnostics.size(); ++i) {
    const auto& a = r.diagnostics[i - 1];
    const auto& b = r.diagnostics[i];
    CHECK(std::tie(a.line, a.column) <= std::tie(b.line, b.column));
  }
}

TEST_CASE("serialize format") {
  KnowledgeBase kb;
  kb.add_individual("b", "TestSuite");
  kb.add_individual("a", "TestCase", {{"name", "n"}, {"input", "i"}});
  kb.add_link("part_of", "a", "b");
  kb.finalize();
  CHECK(tkb::serialize(kb) ==
        "individual a : TestCase {\n  input = \"i\"\n  name = \"n\"\n}\n"
        "individual b : TestSuite\n"
        "link part_of(a, b)\n");
}

TEST_CASE("round trip and canonical order") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto kb = generator::generate_conforming({seed, 30});
    const auto text = tkb::serialize(kb);
    const auto back = parse_ok(text);
    CHECK(back == kb);
    CHECK(tkb::serialize(back) == text);

    std::vector<const Individual*> inds;
    for (const auto& [id, ind] : kb.individuals()) inds.push_back(&ind);
    std::vector<Link> links(kb.links().begin(), kb.links().end());
    std::mt19937_64 rng(seed);
    std::shuffle(inds.begin(), inds.end(), rng);
    std::shuffle(links.begin(), links.end(), rng);
    KnowledgeBase shuffled;
    for (const auto& l : links) shuffled.add_link(l.rel_name, l.source, l.target);
    for (const auto* ind : inds) shuffled.add_individual(ind->id, ind->type_name, ind->attrs);
    shuffled.finalize();
    CHECK(tkb::serialize(shuffled) == text);
  }
}

TEST_CASE("awkward attribute values survive a round trip") {
  KnowledgeBase kb;
  kb.add_individual("x", "TestCase", {{"input", "quote \" backslash \\ newline \n tab \t end"}, {"name", ""}});
  kb.finalize();
  CHECK(parse_ok(tkb::serialize(kb)) == kb);
}
