#include "axioms.hpp"

namespace testtdo::axioms {

using namespace fol;

const std::string kA11AttributeMapping =
    "ExpectedResult(er)/Value(val) with partOf are realised as attributes: the trigger "
    "(er != val) is (attr!= tc.expected_result ar.value), false when either attribute is missing. "
    "One Perform Testing consuming several Test Cases can demand Incidents for unrelated "
    "(tc, ar) pairs; this over-approximation is kept.";

namespace {

FormulaPtr guarded_forall(std::vector<std::string> vars, std::vector<FormulaPtr> guards, FormulaPtr consequent) {
  return forall(std::move(vars), implies(all_of(std::move(guards)), std::move(consequent)));
}

std::vector<AxiomDef> build() {
  std::vector<AxiomDef> out;

  out.push_back({"A1",
                 "For any Perform Testing activity that produces a Test Result, this result is therefore an "
                 "Actual Result or an Incident, but not both at the same time.",
                 guarded_forall({"prt", "tr"},
                                {is("PerformTesting", "prt"), is("TestResult", "tr"), link("produces", "prt", "tr")},
                                any_of({is("ActualResult", "tr"), is("Incident", "tr")})),
                 {}});

  out.push_back({"A2",
                 "Any Testing process has at least three different activities, namely: Design Testing, Perform "
                 "Testing and Analyze Test Results.",
                 guarded_forall({"p"}, {is("Testing", "p")},
                                exists({"a1", "a2", "a3"},
                                       all_of({var_neq("a1", "a2"), var_neq("a1", "a3"), var_neq("a2", "a3"),
                                               is("DesignTesting", "a1"), is("PerformTesting", "a2"),
                                               is("AnalyzeTestResults", "a3"), link("part_of", "a1", "p"),
                                               link("part_of", "a2", "p"), link("part_of", "a3", "p")}))),
                 {}});

  auto requirement_based = [](const char* id, const char* desc, const char* activity_type, const char* var,
                              const char* req_type, const char* req_var) {
    return AxiomDef{
        id, desc,
        guarded_forall({var, "ts"},
                       {is(activity_type, var), is("TestSpecification", "ts"), link("consumes", var, "ts")},
                       exists({"tb", "tdm", req_var, "dt"},
                              all_of({is("TestBasis", "tb"), is("TestingDesignMethod", "tdm"), is(req_type, req_var),
                                      is("DesignTesting", "dt"), link("is_linked_to", "tb", req_var),
                                      link("consumes", "dt", "tb"), link("is_assigned_to", "tdm", "dt"),
                                      link("produces", "dt", "ts")}))),
        {}};
  };
  out.push_back(requirement_based("A3",
                                  "For any Perform Functional Dynamic Testing activity that consumes a Test "
                                  "Specification, this specification is therefore based on a Functional Requirement.",
                                  "PerformFunctionalDynamicTesting", "pfdt", "FunctionalRequirement", "fr"));
  out.push_back(requirement_based("A4",
                                  "For any Perform Non-Functional Dynamic Testing activity that consumes a Test "
                                  "Specification, this specification is therefore based on a Non-Functional "
                                  "Requirement.",
                                  "PerformNonFunctionalDynamicTesting", "pnfdt", "NonFunctionalRequirement", "nfr"));

  auto classification = [](const char* id, const char* desc, const char* tag_name, const char* req_type,
                           const char* req_var) {
    return AxiomDef{
        id, desc,
        guarded_forall({"te"}, {is("TestableEntity", "te")},
                       iff(tag(tag_name, "te"),
                           exists({"tr", "tb", req_var},
                                  all_of({is("TestRequirement", "tr"), is("TestBasis", "tb"), is(req_type, req_var),
                                          link("refers_to", "tr", "te"), link("is_based_on", "tr", "tb"),
                                          link("is_linked_to", "tb", req_var)})))),
        {std::string("Quantifier scoping: the existentials are scoped to the right-hand side of the iff, "
                     "under a universal guarded by TestableEntity(te)."),
         std::string(tag_name) + "(te) is a classification tag read from the 'classification' attribute, "
                                 "since every individual has exactly one declared type."}};
  };
  out.push_back(classification("A5",
                               "Any Testable Entity is an Evaluable Entity iff the Test Requirement that refers to "
                               "this Thing is linked to a Non-Functional Requirement.",
                               "EvaluableEntity", "NonFunctionalRequirement", "nfr"));
  out.push_back(classification("A6",
                               "Any Testable Entity is a Developable Entity iff the Test Requirement that refers to "
                               "this Thing is linked to a Functional Requirement.",
                               "DevelopableEntity", "FunctionalRequirement", "fr"));

  out.push_back({"A7",
                 "Any Test Result produced by a Perform Testing activity has at least one related Test "
                 "Specification which is consumed by the same Perform Testing activity.",
                 guarded_forall({"tr", "prt"},
                                {is("TestResult", "tr"), is("PerformTesting", "prt"), link("produces", "prt", "tr")},
                                exists({"ts"}, all_of({is("TestSpecification", "ts"), link("consumes", "prt", "ts")}))),
                 {}});

  out.push_back({"A8",
                 "All Test Project operationalizes a Test Goal and associates a Testing Strategy iff this Testing "
                 "Strategy helps to achieve the operationalized Test Goal.",
                 guarded_forall({"tp", "tg", "ts"},
                                {is("TestProject", "tp"), is("TestGoal", "tg"), is("TestingStrategy", "ts"),
                                 link("operationalizes", "tp", "tg"), link("associates", "tp", "ts")},
                                link("helps_to_achieve", "ts", "tg")),
                 {"Direction: only the forward implication is checked. The literal iff over all (tp, tg, ts) "
                  "would make every goal-achieving strategy an association of every project."}});

  out.push_back({"A9",
                 "For all Test Requirements derived from a Test Goal, there is at least one Test Project that "
                 "operationalizes this Test Goal.",
                 guarded_forall({"tr", "tg"},
                                {is("TestRequirement", "tr"), is("TestGoal", "tg"), link("is_derived_in", "tg", "tr")},
                                exists({"tp"}, all_of({is("TestProject", "tp"), link("operationalizes", "tp", "tg")}))),
                 {"Quantifier scoping: tg appears only in the antecedent, so it is universally quantified; "
                  "an existential tg would make the axiom hold trivially by picking any non-goal."}});

  out.push_back({"A10",
                 "If a Specification-based Method is assigned to a Design Testing activity that produces a Test "
                 "Specification, then always consumes a Test Basis which is used by the Specification-based Method "
                 "without using the internal structure of the Testable Entity.",
                 guarded_forall({"dt", "spbm", "ts"},
                                {is("DesignTesting", "dt"), is("SpecificationBasedMethod", "spbm"),
                                 is("TestSpecification", "ts"), link("is_assigned_to", "spbm", "dt"),
                                 link("produces", "dt", "ts")},
                                all_of({exists({"tb"}, all_of({is("TestBasis", "tb"), link("consumes", "dt", "tb")})),
                                        forall({"te"}, implies(is("TestableEntity", "te"),
                                                               negate(link("requires_as_input", "dt", "te"))))})),
                 {"Negation scope: 'not requiresAsInput(dt, te)' holds for every Testable Entity te "
                  "(a universal), not for some te."}});

  out.push_back({"A11",
                 "If a Perform Testing activity consumes a Test Case in order to produce an Actual Result, and the "
                 "value of the Actual Result doesn't match with the Test Case's expected result, then the Perform "
                 "Testing activity produces an Incident that relies on this Actual Result.",
                 guarded_forall({"prt", "tc", "ar"},
                                {is("PerformTesting", "prt"), is("TestCase", "tc"), is("ActualResult", "ar"),
                                 link("consumes", "prt", "tc"), link("produces", "prt", "ar"),
                                 attr_neq({"tc", "expected_result"}, {"ar", "value"})},
                                exists({"i"}, all_of({is("Incident", "i"), link("produces", "prt", "i"),
                                                      link("relies_on", "i", "ar")}))),
                 {kA11AttributeMapping}});

  out.push_back({"A12",
                 "If a Structure-based Method is assigned to a Design Testing activity that produces a Test "
                 "Specification, then always requires as input the internal structure of the Testable Entity that "
                 "is used by the Structure-based Method.",
                 guarded_forall({"dt", "stbm", "ts"},
                                {is("DesignTesting", "dt"), is("StructureBasedMethod", "stbm"),
                                 is("TestSpecification", "ts"), link("is_assigned_to", "stbm", "dt"),
                                 link("produces", "dt", "ts")},
                                exists({"te"}, all_of({is("TestableEntity", "te"), link("requires_as_input", "dt", "te")}))),
                 {}});

  auto process_input = [](const char* id, const char* desc, const char* input_type, const char* var,
                          std::vector<std::string> deviations) {
    return AxiomDef{id, desc,
                    guarded_forall({"p", var}, {is("Testing", "p"), is(input_type, var), link("requires_as_input", "p", var)},
                                   exists({"ta"}, all_of({is("TestingActivity", "ta"), link("part_of", "ta", "p"),
                                                          link("requires_as_input", "ta", var)}))),
                    std::move(deviations)};
  };
  out.push_back(process_input("A13",
                              "If a Testing process requires as input a Testable Entity, then some of its Testing "
                              "Activities require and use it as input as well.",
                              "TestableEntity", "te",
                              {"Quantifier scoping: te appears in the antecedent, so it is universally quantified "
                               "(as tce is in the parallel axiom for Test Context Entities)."}));
  out.push_back(process_input("A14",
                              "If a Testing process requires as input a Test Context Entity, then some of its "
                              "Testing Activities require and use it as input as well.",
                              "TestContextEntity", "tce", {}));

  const std::string activity_variable =
      "Consequent variable: the activity ta, not the process p, must take part in the link, matching "
      "'some of its Testing Activities'.";
  auto process_part = [&](const char* id, const char* desc, const char* rel, const char* type, const char* var,
                          std::vector<std::string> extra) {
    std::vector<std::string> deviations{activity_variable};
    for (auto& e : extra) deviations.push_back(std::move(e));
    return AxiomDef{id, desc,
                    guarded_forall({"p", var}, {is("Testing", "p"), is(type, var), link(rel, "p", var)},
                                   exists({"ta"}, all_of({is("TestingActivity", "ta"), link("part_of", "ta", "p"),
                                                          link(rel, "ta", var)}))),
                    std::move(deviations)};
  };
  out.push_back(process_part("A15",
                             "If a Testing process consumes a Test Requirement's specification, then some of its "
                             "Testing Activities consume it as well.",
                             "consumes", "TestRequirementSpecification", "trs",
                             {"Artifact sort: SpecificationOfTestRequirement is the imported stub term "
                              "TestRequirementSpecification (linked to its Test Requirement by 'specifies')."}));
  out.push_back(process_part("A16",
                             "If a Testing process consumes a Test Particular Situation's specification, then some "
                             "of its Testing Activities consume it as well.",
                             "consumes", "TestParticularSituationSpecification", "tps",
                             {"Artifact sort: SpecificationOfTestParticularSituation is the imported stub term "
                              "TestParticularSituationSpecification (linked to its situation by 'specifies')."}));
  out.push_back(process_part("A17",
                             "If a Testing process involves a Testing Role, then some of its Testing Activities "
                             "involve it as well.",
                             "involves", "TestingRole", "tr", {}));
  return out;
}

}  // namespace

const std::vector<AxiomDef>& builtin_axioms() {
  static const std::vector<AxiomDef> catalog = build();
  return catalog;
}

const AxiomDef& axiom(std::string_view id) {
  for (const auto& a : builtin_axioms()) {
    if (a.id == id) return a;
  }
  throw NotFoundError("unknown axiom '" + std::string(id) + "'");
}

EvalResult check_axiom(const KnowledgeBase& kb, const Schema& schema, std::string_view id) {
  return evaluate_with_witness(kb, schema, *axiom(id).formula);
}

}  // namespace testtdo::axioms
