#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "process.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = TESTTDO_CLI_PATH;
const fs::path kFixtures = TESTTDO_FIXTURE_DIR;

process::Output cli(const std::string& args) { return process::run(process::quote(kCli) + " " + args + " 2>/dev/null"); }

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "testtdo_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("validate") {
  const auto motif = scratch("motif.tkb");
  REQUIRE(cli("generate --seed 0 --size 0 -o " + motif.string()).status == 0);
  auto r = cli("validate " + motif.string());
  CHECK(r.status == 0);
  CHECK(r.out.find("verdict: pass") != std::string::npos);

  r = cli("validate " + (kFixtures / "A7_viol.tkb").string());
  CHECK(r.status == 1);
  CHECK(r.out.find("AX-A7") != std::string::npos);

  const auto broken = scratch("broken.tkb");
  std::ofstream(broken) << "individual x TestCase\n";
  CHECK(cli("validate " + broken.string()).status == 2);
  CHECK(cli("validate " + scratch("missing.tkb").string()).status == 2);
  CHECK(cli("validate " + motif.string() + " --mode sloppy").status == 2);
}

TEST_CASE("fail-on threshold") {
  const auto lone = scratch("lone.tkb");
  std::ofstream(lone) << "individual tp : TestProject\n";
  CHECK(cli("validate " + lone.string() + " --mode draft").status == 0);
  CHECK(cli("validate " + lone.string() + " --mode draft --fail-on warning").status == 1);
  CHECK(cli("validate " + lone.string()).status == 1);
  const auto r = cli("validate " + lone.string() + " --format json");
  CHECK(r.out.find("\"code\": \"E020\"") != std::string::npos);
}

TEST_CASE("schema and axioms") {
  auto r = cli("schema counts");
  CHECK(r.status == 0);
  CHECK(r.out == "own=44 reused=4 attributes=51 relationships=43 axioms=17\n");
  r = cli("schema attrs --term TestGoal");
  CHECK(r.status == 0);
  for (const char* a : {"TestGoal.label", "TestGoal.statement", "TestGoal.purpose", "TestGoal.success_criteria"})
    CHECK(r.out.find(a) != std::string::npos);
  CHECK(cli("schema terms --term Nope").status == 2);
  CHECK(cli("schema rels --format json").status == 0);
  CHECK(cli("schema widgets").status == 2);

  r = cli("axioms list");
  CHECK(r.status == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 17);
  r = cli("axioms show A10");
  CHECK(r.status == 0);
  CHECK(r.out.find("Negation scope") != std::string::npos);
  CHECK(cli("axioms show A0").status == 2);
}

TEST_CASE("generate and fmt") {
  const auto out = scratch("g.tkb");
  REQUIRE(cli("generate --seed 1 --size 10 -o " + out.string()).status == 0);
  CHECK(cli("validate " + out.string()).status == 0);
  CHECK(cli("generate --size -5").status == 2);
  CHECK(cli("generate --seed 1 --size 10 -o /nonexistent/dir/x.tkb").status == 2);

  const auto messy = scratch("messy.tkb");
  std::ofstream(messy) << "link part_of(b, a)   # trailing\nindividual b : TestCase {name=\"n\"}\nindividual a : TestSuite\n";
  REQUIRE(cli("fmt " + messy.string()).status == 0);
  const auto once = slurp(messy);
  CHECK(once == "individual a : TestSuite\nindividual b : TestCase {\n  name = \"n\"\n}\nlink part_of(b, a)\n");
  REQUIRE(cli("fmt " + messy.string()).status == 0);
  CHECK(slurp(messy) == once);

  const auto broken = scratch("broken_fmt.tkb");
  std::ofstream(broken) << "individual ? : T\n";
  CHECK(cli("fmt " + broken.string()).status == 2);
  CHECK(slurp(broken) == "individual ? : T\n");
}
