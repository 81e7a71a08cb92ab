// Acceptance suite: one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "axioms.hpp"
#include "generator.hpp"
#include "multiplicity_table.hpp"
#include "oracle.hpp"
#include "process.hpp"
#include "random_models.hpp"
#include "tkb.hpp"
#include "validator.hpp"

namespace fs = std::filesystem;
using namespace testtdo;

namespace {

const fs::path kFixtures = TESTTDO_FIXTURE_DIR;
const std::string kCli = TESTTDO_CLI_PATH;

// Collects failure notes for one criterion.
struct Check {
  std::vector<std::string> failures;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 20) failures.push_back(what);
    if (!ok && failures.size() == 20) failures.push_back("...");
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::set<std::string> axiom_codes(const validator::ValidationReport& r) {
  std::set<std::string> out;
  for (const auto& d : r.diagnostics)
    if (d.axiom_id) out.insert(d.code);
  return out;
}

std::set<std::string> codes(const validator::ValidationReport& r) {
  std::set<std::string> out;
  for (const auto& d : r.diagnostics) out.insert(d.code);
  return out;
}

validator::ValidationReport validate(const KnowledgeBase& kb, validator::Mode mode = validator::Mode::Complete) {
  return validator::validate(kb, builtin_schema(), mode);
}

std::string join(const std::set<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ",") + x;
  return "{" + out + "}";
}

void criterion_counts(Check& c) {
  const auto n = builtin_schema().counts();
  const auto axioms = axioms::builtin_axioms().size();
  c.expect(n.own == 44, "own=" + std::to_string(n.own));
  c.expect(n.reused == 4, "reused=" + std::to_string(n.reused));
  c.expect(n.attributes == 51, "attributes=" + std::to_string(n.attributes));
  c.expect(n.relationships == 43, "relationships=" + std::to_string(n.relationships));
  c.expect(axioms == 17, "axioms=" + std::to_string(axioms));
  c.detail = "own=" + std::to_string(n.own) + " reused=" + std::to_string(n.reused) +
             " attributes=" + std::to_string(n.attributes) + " relationships=" + std::to_string(n.relationships) +
             " axioms=" + std::to_string(axioms);
}

void criterion_oracle(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  const auto& s = builtin_schema();
  const auto& all = axioms::builtin_axioms();
  const auto broad = random_models::axiom_vocabulary();
  std::vector<random_models::Vocabulary> focused;
  for (const auto& a : all) focused.push_back(random_models::vocabulary_of(*a.formula));

  std::size_t comparisons = 0, violations = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto& vocab = seed % 2 == 0 ? broad : focused[(seed / 2) % focused.size()];
    const auto kb = random_models::random_kb(seed, vocab, 6, 10);
    c.expect(kb.size() <= 6 && kb.links().size() <= 10, "random KB too large");
    fol::Evaluator engine(kb, s);
    for (const auto& a : all) {
      const auto got = engine.evaluate_with_witness(*a.formula);
      const auto want = oracle::eval_with_witness(kb, s, *a.formula);
      ++comparisons;
      violations += got.value ? 0 : 1;
      c.expect(got.value == want.value && got.witness == want.witness,
               a.id + " disagrees on KB seed " + std::to_string(seed));
    }
  }

  std::mt19937_64 rng(2024);
  std::size_t formulas = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto kb = random_models::random_kb(10'000 + i, broad, 6, 10);
    const auto f = random_models::random_formula(rng, broad, 4);
    c.expect(fol::depth(*f) <= 4, "formula deeper than 4");
    const auto got = fol::evaluate_with_witness(kb, s, *f);
    const auto want = oracle::eval_with_witness(kb, s, *f);
    ++formulas;
    c.expect(got.value == want.value && got.witness == want.witness, "formula " + fol::to_string(*f));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < 60.0, "took " + std::to_string(secs) + " s");
  std::ostringstream d;
  d.precision(2);
  d << std::fixed << comparisons << " axiom checks (" << violations << " violated), " << formulas
    << " random formulas, " << secs << " s";
  c.detail = d.str();
}

// The guard of a sat fixture must actually fire, or the fixture proves nothing.
bool guard_fires(const KnowledgeBase& kb, const axioms::AxiomDef& a) {
  const auto& q = std::get<fol::Forall>(a.formula->node);
  const auto& imp = std::get<fol::Implies>(q.body->node);
  return oracle::eval(kb, builtin_schema(), *fol::exists(q.vars, imp.lhs));
}

void criterion_fixtures(Check& c) {
  std::size_t files = 0;
  for (const auto& a : axioms::builtin_axioms()) {
    for (const bool sat : {true, false}) {
      const auto path = kFixtures / (a.id + (sat ? "_sat.tkb" : "_viol.tkb"));
      ++files;
      const auto parsed = tkb::parse(slurp(path));
      if (!parsed.ok()) {
        c.expect(false, path.filename().string() + " does not parse");
        continue;
      }
      const auto found = axiom_codes(validate(*parsed.kb));
      const std::set<std::string> want = sat ? std::set<std::string>{} : std::set<std::string>{"AX-" + a.id};
      c.expect(found == want, path.filename().string() + " reports " + join(found));
      c.expect(guard_fires(*parsed.kb, a), path.filename().string() + " never triggers the guard");
    }
  }
  std::size_t on_disk = 0;
  for (const auto& e : fs::directory_iterator(kFixtures)) on_disk += e.path().extension() == ".tkb" ? 1 : 0;
  c.expect(on_disk == 34, std::to_string(on_disk) + " fixture files on disk");
  c.detail = std::to_string(files) + " fixtures";
}

void criterion_multiplicities(Check& c, std::vector<std::string>& table) {
  const auto& rows = builtin_schema().relationships();
  c.expect(rows.size() == audit::kRows.size(), "row count " + std::to_string(rows.size()));
  std::size_t matched = 0;
  for (const auto& row : audit::kRows) {
    const auto expected = audit::read_sentence(row.sentence);
    auto it = std::find_if(rows.begin(), rows.end(), [&](const RelationshipDef& r) {
      return r.rel_name == row.rel_name && r.source == row.source && r.target == row.target;
    });
    const bool ok = it != rows.end() && it->target_mult == expected.target && it->source_mult == expected.source;
    matched += ok ? 1 : 0;
    std::string line = std::string(ok ? "ok   " : "FAIL ") + std::string(row.rel_name) + "(" +
                       std::string(row.source) + " -> " + std::string(row.target) + ") target " +
                       to_string(expected.target) + " source " + to_string(expected.source) + "  \"" +
                       std::string(row.sentence) + "\"";
    table.push_back(line);
    c.expect(ok, std::string(row.rel_name) + "(" + std::string(row.source) + ", " + std::string(row.target) + ")");
  }
  c.detail = std::to_string(matched) + "/" + std::to_string(audit::kRows.size()) + " rows match";
}

void criterion_round_trip(Check& c) {
  static constexpr std::size_t kSizes[] = {0, 10, 30, 60};
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto kb = generator::generate_conforming({seed, kSizes[seed % 4]});
    const auto text = tkb::serialize(kb);
    const auto back = tkb::parse(text);
    c.expect(back.ok() && *back.kb == kb, "seed " + std::to_string(seed) + " does not round-trip");
    if (!back.ok()) continue;
    c.expect(tkb::serialize(*back.kb) == text, "seed " + std::to_string(seed) + " serialize not idempotent");

    std::vector<const Individual*> inds;
    for (const auto& [id, ind] : kb.individuals()) inds.push_back(&ind);
    std::vector<Link> links(kb.links().begin(), kb.links().end());
    std::mt19937_64 rng(seed ^ 0x5eedULL);
    std::shuffle(inds.begin(), inds.end(), rng);
    std::shuffle(links.begin(), links.end(), rng);
    KnowledgeBase shuffled;
    for (const auto* ind : inds) shuffled.add_individual(ind->id, ind->type_name, ind->attrs);
    for (const auto& l : links) shuffled.add_link(l.rel_name, l.source, l.target);
    shuffled.finalize();
    c.expect(tkb::serialize(shuffled) == text, "seed " + std::to_string(seed) + " not canonical under shuffle");
  }
  c.detail = "500 seeds";
}

void criterion_generator(Check& c) {
  std::size_t generated = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    for (std::size_t size : {0u, 10u, 50u, 200u}) {
      const auto kb = generator::generate_conforming({seed, size});
      ++generated;
      const auto r = validate(kb);
      c.expect(r.verdict == validator::Verdict::Pass,
               "seed " + std::to_string(seed) + " size " + std::to_string(size) + " reports " + join(codes(r)));
    }
  }

  std::size_t injected = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto base = generator::generate_conforming({seed, seed == 0 ? 0u : 50u});
    const std::string tag = " (seed " + std::to_string(seed) + ")";
    const auto lower = validate(generator::perturb(base, seed, generator::PerturbKind::lower()));
    c.expect(codes(lower).count("E020") == 1, "lower bound not injected" + tag);
    const auto upper = validate(generator::perturb(base, seed, generator::PerturbKind::upper()));
    c.expect(codes(upper).count("E021") == 1, "upper bound not injected" + tag);
    injected += 2;
    for (const auto& a : axioms::builtin_axioms()) {
      const auto r = validate(generator::perturb(base, seed, generator::PerturbKind::axiom(a.id)));
      c.expect(axiom_codes(r) == std::set<std::string>{"AX-" + a.id}, a.id + " injection reports " +
                                                                         join(axiom_codes(r)) + tag);
      ++injected;
    }
  }
  c.detail = std::to_string(generated) + " conforming models, " + std::to_string(injected) + " perturbations";
}

void criterion_determinism(Check& c) {
  const auto dir = fs::temp_directory_path() / "testtdo_acceptance";
  fs::create_directories(dir);
  const auto generated = dir / "g.tkb";
  std::vector<std::string> commands;
  commands.push_back("generate --seed 17 --size 120");
  for (const char* f : {"A1_viol.tkb", "A7_viol.tkb", "A11_viol.tkb", "A2_sat.tkb"}) {
    const auto p = process::quote((kFixtures / f).string());
    commands.push_back("validate " + p);
    commands.push_back("validate " + p + " --format json --mode draft");
  }
  commands.push_back("schema terms --format json");
  commands.push_back("axioms list");
  const auto quoted_cli = process::quote(kCli);
  process::run(quoted_cli + " generate --seed 3 --size 200 -o " + process::quote(generated.string()));
  auto bad = generator::perturb(*tkb::parse(slurp(generated)).kb, 3, generator::PerturbKind::axiom("A13"));
  const auto bad_path = dir / "bad.tkb";
  std::ofstream(bad_path) << tkb::serialize(bad);
  for (const auto& p : {generated, bad_path}) {
    commands.push_back("validate " + process::quote(p.string()));
    commands.push_back("validate " + process::quote(p.string()) + " --format json");
  }
  for (const auto& cmd : commands) {
    const auto first = process::run(quoted_cli + " " + cmd + " 2>&1");
    for (int i = 0; i < 3; ++i) {
      const auto again = process::run(quoted_cli + " " + cmd + " 2>&1");
      c.expect(again.out == first.out && again.status == first.status, "output differs: " + cmd);
    }
    c.expect(!first.out.empty(), "no output: " + cmd);
  }
  c.detail = std::to_string(commands.size()) + " commands x 4 runs";
}

void criterion_monotonicity(Check& c) {
  std::size_t compared = 0;
  auto compare = [&](const KnowledgeBase& kb, const std::string& name) {
    auto draft = validate(kb, validator::Mode::Draft);
    const auto complete = validate(kb, validator::Mode::Complete);
    for (auto& d : draft.diagnostics) {
      if (d.code != "W020") continue;
      d.code = "E020";
      d.severity = validator::Severity::Error;
    }
    std::sort(draft.diagnostics.begin(), draft.diagnostics.end(), validator::diagnostic_less);
    c.expect(draft.diagnostics == complete.diagnostics, name);
    ++compared;
  };
  for (const auto& e : fs::directory_iterator(kFixtures)) {
    const auto parsed = tkb::parse(slurp(e.path()));
    if (parsed.ok()) compare(*parsed.kb, e.path().filename().string());
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    compare(generator::perturb(generator::generate_conforming({seed, 40}), seed, generator::PerturbKind::lower()),
            "lower-bound perturbation seed " + std::to_string(seed));
  c.detail = std::to_string(compared) + " reports";
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    std::function<void(Check&)> run;
  };
  std::vector<std::string> audit_table;
  const std::vector<Criterion> criteria = {
      {1, "schema conformance counts", criterion_counts},
      {2, "oracle equivalence", criterion_oracle},
      {3, "per-axiom fixture suite", criterion_fixtures},
      {4, "multiplicity rule audit", [&](Check& c) { criterion_multiplicities(c, audit_table); }},
      {5, "parser round-trip", criterion_round_trip},
      {6, "generator conformance and perturbation", criterion_generator},
      {7, "CLI determinism", criterion_determinism},
      {8, "mode monotonicity", criterion_monotonicity},
  };
  int failed = 0;
  for (const auto& crit : criteria) {
    Check c;
    try {
      crit.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    failed += ok ? 0 : 1;
    std::cout << "criterion " << crit.number << ": " << (ok ? "PASS" : "FAIL") << " " << crit.title << " ("
              << c.detail << ")\n";
    for (const auto& f : c.failures) std::cout << "    " << f << "\n";
    if (crit.number == 4)
      for (const auto& line : audit_table) std::cout << "    " << line << "\n";
  }
  return failed == 0 ? 0 : 1;
}
