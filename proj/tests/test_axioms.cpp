#include <doctest.h>

#include "axioms.hpp"
#include "oracle.hpp"
#include "random_models.hpp"

using namespace testtdo;

TEST_CASE("catalog") {
  const auto& all = axioms::builtin_axioms();
  REQUIRE(all.size() == 17);
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].id == "A" + std::to_string(i + 1));
  CHECK(axioms::axiom("A1").description.find("but not both at the same time") != std::string::npos);
  CHECK_THROWS_AS(axioms::axiom("A18"), NotFoundError);
  CHECK_THROWS_AS(axioms::axiom("A0"), NotFoundError);
  CHECK(axioms::axiom("A10").deviations.front().find("Negation scope") != std::string::npos);
  CHECK(axioms::axiom("A1").deviations.empty());
}

TEST_CASE("every axiom is a guarded universal") {
  for (const auto& a : axioms::builtin_axioms()) {
    CAPTURE(a.id);
    const auto* q = std::get_if<fol::Forall>(&a.formula->node);
    REQUIRE(q != nullptr);
    CHECK(std::holds_alternative<fol::Implies>(q->body->node));
  }
}

TEST_CASE("A2 motif satisfies A2") {
  KnowledgeBase kb;
  kb.add_individual("t", "Testing");
  kb.add_individual("a1", "DesignTesting");
  kb.add_individual("a2", "PerformTesting");
  kb.add_individual("a3", "AnalyzeTestResults");
  kb.add_link("part_of", "a1", "t");
  kb.add_link("part_of", "a2", "t");
  kb.add_link("part_of", "a3", "t");
  kb.finalize();
  CHECK(axioms::check_axiom(kb, builtin_schema(), "A2").value);
}

TEST_CASE("A7 witness when nothing is consumed") {
  KnowledgeBase kb;
  kb.add_individual("prt", "PerformTesting");
  kb.add_individual("tr", "ActualResult");
  kb.add_link("produces", "prt", "tr");
  kb.finalize();
  const auto r = axioms::check_axiom(kb, builtin_schema(), "A7");
  CHECK_FALSE(r.value);
  CHECK(r.witness == fol::Binding{{"tr", "tr"}, {"prt", "prt"}});
}

TEST_CASE("empty KB satisfies every axiom") {
  KnowledgeBase kb;
  kb.finalize();
  for (const auto& a : axioms::builtin_axioms()) CHECK(axioms::check_axiom(kb, builtin_schema(), a.id).value);
}

TEST_CASE("axioms agree with the oracle on focused random KBs") {
  const auto& s = builtin_schema();
  for (const auto& a : axioms::builtin_axioms()) {
    const auto vocab = random_models::vocabulary_of(*a.formula);
    std::size_t violated = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
      const auto kb = random_models::random_kb(seed, vocab);
      const auto got = axioms::check_axiom(kb, s, a.id);
      const auto want = oracle::eval_with_witness(kb, s, *a.formula);
      CAPTURE(a.id);
      CAPTURE(seed);
      CHECK(got.value == want.value);
      CHECK(got.witness == want.witness);
      violated += got.value ? 0 : 1;
    }
    CAPTURE(a.id);
    CHECK(violated > 0);  // the generator actually exercises the axiom
  }
}
