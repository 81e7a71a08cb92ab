#pragma once

// Relationship rows with the sentence each multiplicity is read from.

#include <array>
#include <string_view>

#include "schema.hpp"

namespace audit {

struct Row {
  std::string_view rel_name, source, target, sentence;
};

inline constexpr std::array<Row, 43> kRows{{
    {"adopts", "TestingManagement", "TestingLifeCycle",
     "A Testing Management process adopts a Testing Life Cycle."},
    {"associates", "TestProject", "TestingStrategy",
     "A Test Project associates one or more Testing Strategies."},
    {"consumes", "AnalyzeTestResults", "TestResult",
     "An Analyze Test Results activity consumes one or more Test Result as work product."},
    {"consumes", "PerformTesting", "TestSpecification",
     "A Perform Testing activity consumes one or more Test Specification as artifact."},
    {"consumes", "AnalyzeTestResults", "TestSpecification",
     "An Analyze Test Results activity consumes one or more Test Specification as artifact."},
    {"consumes", "DesignTesting", "TestBasis",
     "A Design Testing activity consumes Test Basis, if any."},
    {"consumes", "Testing", "TestParticularSituationSpecification",
     "A Testing work process can consume one or more Test Particular Situation's model specifications as Artifacts."},
    {"consumes", "Testing", "TestRequirementSpecification",
     "A Testing work process can consume one or more Test Requirement's specifications as Artifacts."},
    {"deals_with_test_environment", "TestParticularSituation", "TestContextEntity",
     "A Test Particular Situation deals with none or many concrete Test Context Entities as a test environment."},
    {"deals_with_test_target", "TestParticularSituation", "TestableEntity",
     "A Test Particular Situation deals with one or more concrete Testable Entities as a test target."},
    {"defines", "TestProject", "TestParticularSituation",
     "A Test Project defines one or several Test Particular Situations."},
    {"helps_to_achieve", "TestingStrategy", "TestGoal",
     "A Testing Strategy gives support for achieving one or more Test Goals."},
    {"implies", "TestGoal", "TestParticularSituation",
     "A Test Goal implies one or more Test Particular Situations."},
    {"influences", "TestContextEntity", "TestableEntity",
     "A Test Context Entity influences one or several Testable Entities."},
    {"involves", "Testing", "TestingRole",
     "A Testing Work Process involves one or more Testing Roles. In turn, a Testing Role may participate in one or more Testing Work Process."},
    {"is_assigned_to", "StaticTestingMethod", "PerformStaticTesting",
     "A Static Testing Method is assigned to one or more Perform Static Testing activities."},
    {"is_assigned_to", "DynamicTestingMethod", "PerformDynamicTesting",
     "A Dynamic Testing Method is assigned to one or more Perform Dynamic Testing activities."},
    {"is_assigned_to", "TestingDesignMethod", "DesignTesting",
     "A Testing Design Method is assigned to one or more Design Testing activities."},
    {"is_assigned_to", "TestingAgent", "TestingActivity",
     "A Testing Agent is assigned to one or more Testing Activities."},
    {"is_based_on", "RealizationProcedure", "TestSpecification",
     "A Realization Procedure is based on none or several Test Specifications."},
    {"is_based_on", "TestRequirement", "TestBasis",
     "A Test Requirement is based on none or several Test Basis."},
    {"is_derived_in", "TestGoal", "TestRequirement",
     "A Test Goal is derived in one or more Test Requirements."},
    {"is_linked_to", "TestBasis", "NonFunctionalRequirement",
     "A Test Basis is linked to none or several Non-Functional Requirements."},
    {"is_linked_to", "TestBasis", "FunctionalRequirement",
     "A Test Basis is linked to none or several Functional Requirements."},
    {"is_managed_by", "TestProject", "TestingManagement",
     "A Test Project is managed by means of a Testing Management process."},
    {"is_supported_by", "TestGoal", "TestInformationNeed",
     "A Test Goal is supported by one or more Test Information Needs."},
    {"operationalizes", "TestProject", "TestGoal",
     "A Test Project operationalizes one or more Test Goals."},
    {"plays", "TestingAgent", "TestingRole",
     "A Testing Agent plays one or more Testing Roles. In turn, a Testing Role is played by one or more Testing Agents."},
    {"produces", "TestingManagement", "TestPlan",
     "A Testing Management process produces a Test Plan as artifact."},
    {"produces", "PerformTesting", "TestResult",
     "A Perform Testing activity produces a Test Result as work product."},
    {"produces", "AnalyzeTestResults", "TestConclusionReport",
     "An Analyze Test Results activity produces a Test Conclusion Report as artifact."},
    {"produces", "DesignTesting", "RealizationProcedure",
     "A Design Testing activity produces one or more Realization Procedure."},
    {"produces", "DesignTesting", "TestSpecification",
     "A Design Testing activity produces one or more Test Specification as artifact."},
    {"refers_to", "TestRequirement", "TestableEntity",
     "A Test Requirement in its statement always refers to a Testable Entity."},
    {"refers_to", "TestRequirement", "TestContextEntity",
     "A Test Requirement can refer to a one or more Test Context Entities."},
    {"relies_on", "Incident", "ActualResult",
     "An Incident detected in a Perform Testing activity relies on none or several Actual Results."},
    {"requires_as_input", "Testing", "TestableEntity",
     "A Testing process needs a Testable Entity as input."},
    {"requires_as_input", "Testing", "TestContextEntity",
     "A Testing process needs none or many Test Context Entities as input."},
    {"surrounded_by", "TestableEntity", "TestContextEntity",
     "A Testable Entity is surrounded by one or several Test Context Entities."},
    {"takes_into_account", "AnalyzeTestResults", "TestInformationNeed",
     "An Analyze Test Results activity consumes one or more Test Information Needs as a specification."},
    {"uses", "TestingLifeCycle", "TestingStrategy",
     "A Testing Life Cycle uses one or more Testing Strategies."},
    {"uses", "TestingAgent", "TestingTool",
     "A Testing Agent uses Testing Tools, if any."},
    {"verifies_validates", "TestSpecification", "TestableEntity",
     "A Test Specification verifies/validates one or more Testable Entities. In turn, a Testable Entity is verified/validated by one or more Test Specifications."},
}};

struct Reading {
  testtdo::Multiplicity target;
  testtdo::Multiplicity source;
};

// Phrase rule: "none or many" / "none or several" / "if any" -> 0..*,
// "one or more" / "one or several" -> 1..*, a bare "a"/"an" -> 1..1. The
// source side is only constrained by an "In turn, ..." clause.
inline testtdo::Multiplicity read_phrase(std::string_view clause) {
  auto has = [&](std::string_view p) { return clause.find(p) != std::string_view::npos; };
  if (has("none or many") || has("none or several") || has("if any")) return {0, std::nullopt};
  if (has("one or more") || has("one or several")) return {1, std::nullopt};
  return {1, 1};
}

inline Reading read_sentence(std::string_view sentence) {
  constexpr std::string_view kInTurn = "In turn,";
  const auto split = sentence.find(kInTurn);
  if (split == std::string_view::npos) return {read_phrase(sentence), {0, std::nullopt}};
  return {read_phrase(sentence.substr(0, split)), read_phrase(sentence.substr(split + kInTurn.size()))};
}

}  // namespace audit
