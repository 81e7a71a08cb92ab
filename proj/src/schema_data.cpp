// Compiled-in TestTDO v1.3 metamodel: terms, taxonomy, attributes and
// non-taxonomic relationships.


#include "schema.hpp"

namespace testtdo {
namespace {

using P = Provenance;
using K = TermKind;

TermDef own(std::string name, std::string display, std::vector<std::string> synonyms,
            std::string definition) {
  return {std::move(name), std::move(display), std::move(synonyms), std::move(definition),
          P::TestTDO, K::OwnOrExtended};
}

TermDef reused(std::string name, std::string display, P provenance, std::string definition) {
  return {std::move(name), std::move(display), {}, std::move(definition), provenance, K::Reused};
}

TermDef stub(std::string name, std::string display, P provenance) {
  return {std::move(name), std::move(display), {}, "", provenance, K::ImportedStub};
}

std::vector<TermDef> terms() {
  return {
      own("ActualResult", "Actual Result", {},
          "It is a Test Result that represents a numerical or categorical value (expected or unexpected)."),
      own("AnalyzeTestResults", "Analyze Test Results", {"Testing Analysis"},
          "It is a Testing Activity that takes into account the specific Test Information Need in order to "
          "produce a Test Conclusion Report by consuming one or more Test Results and Test Specifications."),
      own("DesignTesting", "Design Testing", {"Testing Design"},
          "It is a Testing Activity aimed at designing a set of Test Specifications (i.e., Test Cases, Test "
          "Suites and/or Test Checklists) as well as Realization Procedures."),
      own("DynamicTestingMethod", "Dynamic Testing Method", {},
          "It is a Testing Realization Method for a task included in a Perform Dynamic Testing activity."),
      own("ExperienceBasedMethod", "Experience-based Method", {},
          "It is a Testing Design Method that uses the Testing Human Agent's knowledge, expertise and intuition "
          "while enacting the Design Testing activity for deriving Test Specifications."),
      own("Incident", "Incident", {"Anomaly", "Defect", "Issue Report"},
          "It is a Test Result that reports deviations (e.g. between the expected result and the Actual "
          "Result), anomalies (e.g. an error or a failure) or other arisen issues during the Perform Testing "
          "activity."),
      own("PerformDynamicTesting", "Perform Dynamic Testing", {"Dynamic Testing"},
          "It is a Perform Testing activity aimed at verifying/validating a Testable Entity against one or more "
          "Test Specifications with the execution of its software code."),
      own("PerformFunctionalDynamicTesting", "Perform Functional Dynamic Testing", {"Functional Dynamic Testing"},
          "It is a Dynamic Testing activity aimed at verifying/validating the compliance of a Testable Entity "
          "with Functional Requirements."),
      own("PerformNonFunctionalDynamicTesting", "Perform Non-functional Dynamic Testing",
          {"Non-functional Dynamic Testing"},
          "It is a Dynamic Testing activity aimed at appraising the compliance of a Testable Entity with "
          "Non-Functional Requirements."),
      own("PerformStaticTesting", "Perform Static Testing", {"Static Testing"},
          "It is a Perform Testing activity aimed at checking a Testable Entity against one or more Test "
          "Specifications without the execution of its software code (if any)."),
      own("PerformTesting", "Perform Testing", {"Testing Realization"},
          "It is a Testing Activity aimed at enacting a Static or Dynamic Testing."),
      own("RealizationProcedure", "Realization Procedure", {},
          "Arranged set of Testing Realization Method's instructions or operations, which specifies how must be "
          "performed the Perform Testing activity using the Test Specification."),
      own("SpecificationBasedMethod", "Specification-based Method", {"Black-box Method"},
          "It is a Testing Design Method that always uses a Test Basis while enacting the Design Testing "
          "activity for deriving Test Specifications without referring to the internal structure of the "
          "Testable Entity."),
      own("StaticTestingMethod", "Static Testing Method", {},
          "It is a Testing Realization Method for a task included in a Perform Static Testing activity."),
      own("StructureBasedMethod", "Structure-based Method", {"White-box Method"},
          "It is a Testing Design Method that uses the internal structure of the Testable Entity, and sometimes "
          "also uses a Test Basis, while enacting the Design Testing activity for deriving Test Specifications."),
      own("TestBasis", "Test Basis", {},
          "Artifact consumed by a Design Testing activity for designing the Test Cases and Checklists."),
      own("TestCase", "Test Case", {},
          "It is a Test Specification that contains the necessary information (e.g. preconditions, inputs, "
          "expected results and postconditions) to perform mainly Dynamic Testing."),
      own("TestChecklist", "Test Checklist", {},
          "It is a Test Specification that contains a list of items to be checked in order to perform mainly "
          "Static Testing."),
      own("TestConclusionReport", "Test Conclusion Report", {},
          "It is an Artifact that documents the analysis of all Test Results."),
      own("TestContextEntity", "Test Context Entity", {},
          "It represents the concrete Context Object in which the Testable Entity is situated."),
      own("TestGoal", "Test Goal", {"Test Objective"},
          "It is a business goal for testing that the organization intends to achieve."),
      own("TestInformationNeed", "Test Information Need", {},
          "It is an Information Need Goal that is achieved by conducting Testing Activities."),
      own("TestItem", "Test Item", {}, "A part of a Testable Entity, which is a Test Object as well."),
      own("TestParticularSituation", "Test Particular Situation", {},
          "It represents an association between one or more Testable Entities in the role of test target and "
          "none or many Test Context Entities in the role of test environment."),
      own("TestPlan", "Test Plan", {},
          "The document (Artifact) that describes how the Test Project will be planned, scheduled, executed, "
          "monitored, and controlled."),
      own("TestProject", "Test Project", {},
          "It is a Project representing a temporary and goal-oriented endeavor for testing with definite start "
          "and finish dates, which considers a managed set of interrelated Testing Activities, tasks and "
          "resources aimed at producing and modifying unique work products (e.g., Test Specifications, Test "
          "Results, etc.) for satisfying a given requester need."),
      own("TestRequirement", "Test Requirement", {},
          "It states, taking into account the Test Goal purpose, what must be verified/validated of a Testable "
          "Entity (and/or Test Item) based on the Test Basis, if any."),
      own("TestResult", "Test Result", {},
          "It is a Work Product that represents both an Incident (Artifact) and an Actual Result (Outcome), "
          "which is produced by running the Perform Testing activity."),
      own("TestSpecification", "Test Specification", {},
          "It is an Artifact that represents Test Checklists, Test Cases and their grouping in Test Suites."),
      own("TestSuite", "Test Suite", {"Test Set"},
          "It is a Test Specification that includes a set of one or more Test Cases with common constraints on "
          "their realization."),
      own("TestableEntity", "Testable Entity", {"Test Object"}, "A concrete object able to be tested."),
      own("Testing", "Testing", {"Testing Process"},
          "It is a process (Work Process) that is composed of at least three interrelated Testing Activities "
          "conducted to facilitate the discovery of defects and/or the assessment of Characteristics and "
          "Attributes of a Testable Entity."),
      own("TestingActivity", "Testing Activity", {},
          "It is an Activity that is formed by an interrelated set of sub-activities and tasks, aimed at "
          "designing, realizing or analyzing the testing endeavor for a particular Testable Entity."),
      own("TestingAgent", "Testing Agent", {},
          "It is an Agent -i.e., a work resource- assigned to a Testing Activity in compliance with one or more "
          "Testing Roles."),
      own("TestingAutomatedAgent", "Testing Automated Agent", {},
          "It is a Testing Agent, which is not a human being."),
      own("TestingDesignMethod", "Testing Design Method", {},
          "It is a Testing Method for a task included in a Design Testing activity."),
      own("TestingHumanAgent", "Testing Human Agent", {}, "It is a Testing Agent, which is a human being."),
      own("TestingLifeCycle", "Testing Life Cycle", {},
          "The series of phases that a Test Project passes through from its initiation to its closure."),
      own("TestingManagement", "Testing Management", {},
          "It is the set of managerial processes and activities intended to achieve the Test Goal "
          "operationalized by a Test Project."),
      own("TestingMethod", "Testing Method", {"Testing Technique"},
          "A specific and particular way to perform the specified steps for a task included in a Testing "
          "Activity."),
      own("TestingRealizationMethod", "Testing Realization Method", {},
          "It is a Testing Method for a task included in a Testing Realization activity."),
      own("TestingRole", "Testing Role", {}, "It is a Role that implies a set of testing skills."),
      own("TestingStrategy", "Testing Strategy", {},
          "Principles, patterns, and particular test domain concepts and framework that can be specified by a "
          "set of core Testing Processes, in addition to a set of appropriated Testing Methods and Tools, as "
          "core resources, for helping to achieve the Project's Test Goal purpose."),
      own("TestingTool", "Testing Tool", {},
          "It is a Tool that partially or totally accomplishes the automatic execution of a Testing Method."),

      reused("FunctionalRequirement", "Functional Requirement", P::FRsTDO, "Reused from FRsTDO."),
      reused("NonFunctionalRequirement", "Non-Functional Requirement", P::NFRsTDO, "Reused from NFRsTDO."),
      reused("DevelopableEntity", "Developable Entity", P::FRsTDO, "Reused from FRsTDO."),
      reused("EvaluableEntity", "Evaluable Entity", P::NFRsTDO, "Reused from NFRsTDO."),

      stub("WorkProduct", "Work Product", P::ProcCO),
      stub("Artifact", "Artifact", P::ProcCO),
      stub("Outcome", "Outcome", P::ProcCO),
      stub("WorkProcess", "Work Process", P::ProcCO),
      stub("Activity", "Activity", P::ProcCO),
      stub("Agent", "Agent", P::ProcCO),
      stub("Role", "Role", P::ProcCO),
      stub("Method", "Method", P::ProcCO),
      stub("Tool", "Tool", P::ProcCO),
      stub("Project", "Project", P::ProjCO),
      stub("Goal", "Goal", P::GCO),
      stub("InformationNeedGoal", "Information Need Goal", P::GCO),
      stub("ContextEntity", "Context Entity", P::SCO),
      stub("ParticularSituation", "Particular Situation", P::SCO),
      stub("TestRequirementSpecification", "Test Requirement's specification", P::ProcCO),
      stub("TestParticularSituationSpecification", "Test Particular Situation's model specification",
           P::ProcCO),
  };
}

std::vector<TaxonomyEdge> taxonomy() {
  return {
      {"ActualResult", "TestResult"},
      {"ActualResult", "Outcome"},
      {"Incident", "TestResult"},
      {"Incident", "Artifact"},
      {"TestResult", "WorkProduct"},
      {"Artifact", "WorkProduct"},
      {"Outcome", "WorkProduct"},

      {"TestingActivity", "Activity"},
      {"AnalyzeTestResults", "TestingActivity"},
      {"DesignTesting", "TestingActivity"},
      {"PerformTesting", "TestingActivity"},
      {"PerformDynamicTesting", "PerformTesting"},
      {"PerformStaticTesting", "PerformTesting"},
      {"PerformFunctionalDynamicTesting", "PerformDynamicTesting"},
      {"PerformNonFunctionalDynamicTesting", "PerformDynamicTesting"},
      {"Testing", "WorkProcess"},

      {"TestingMethod", "Method"},
      {"TestingDesignMethod", "TestingMethod"},
      {"TestingRealizationMethod", "TestingMethod"},
      {"ExperienceBasedMethod", "TestingDesignMethod"},
      {"SpecificationBasedMethod", "TestingDesignMethod"},
      {"StructureBasedMethod", "TestingDesignMethod"},
      {"DynamicTestingMethod", "TestingRealizationMethod"},
      {"StaticTestingMethod", "TestingRealizationMethod"},

      {"TestSpecification", "Artifact"},
      {"TestCase", "TestSpecification"},
      {"TestChecklist", "TestSpecification"},
      {"TestSuite", "TestSpecification"},
      {"TestBasis", "Artifact"},
      {"TestConclusionReport", "Artifact"},
      {"TestPlan", "Artifact"},
      {"TestRequirementSpecification", "Artifact"},
      {"TestParticularSituationSpecification", "Artifact"},

      {"TestingAgent", "Agent"},
      {"TestingHumanAgent", "TestingAgent"},
      {"TestingAutomatedAgent", "TestingAgent"},
      {"TestingRole", "Role"},
      {"TestingTool", "Tool"},

      {"TestProject", "Project"},
      {"TestGoal", "Goal"},
      {"InformationNeedGoal", "Goal"},
      {"TestInformationNeed", "InformationNeedGoal"},
      {"TestContextEntity", "ContextEntity"},
      {"TestParticularSituation", "ParticularSituation"},
      {"TestItem", "TestableEntity"},
  };
}

std::vector<AttributeDef> attributes() {
  const std::string name_of = "Label or name that identifies the ";
  const std::string version_of = "Unique identifier, which indicates the level of evolution of the ";
  const std::string description_of = "An unambiguous textual statement describing the ";
  const std::string aim = "An explicit declaration of the aim to be achieved.";
  return {
      {"ActualResult", "value", "Numerical or categorical result."},
      {"Incident", "version", version_of + "Incident artifact."},
      {"RealizationProcedure", "specification", "A formal or semiformal representation of a Realization Procedure."},
      {"TestBasis", "name", name_of + "Test Basis artifact."},
      {"TestBasis", "version", version_of + "Test Basis artifact."},
      {"TestCase", "precondition",
       "Any kind of constraint that must evaluate to true before the Test Case's input be used in a Perform "
       "Testing activity."},
      {"TestCase", "input",
       "Test Case inputs are the data (numbers, categories, objects' instances, etc.) and/or events (e.g., "
       "button clicks) used to exercise a Testable Entity in a Perform Testing activity."},
      {"TestCase", "expected_result",
       "Value and/or behavior that is expected to get after a Testable Entity is exercised using the Test Case "
       "inputs."},
      {"TestCase", "postcondition",
       "Any kind of constraint that must evaluate to true after the Test Case's input was used and the Actual "
       "Result was yielded in a Perform Testing activity."},
      {"TestChecklist", "item_description", ""},
      {"TestConclusionReport", "name", name_of + "Test Conclusion Report."},
      {"TestConclusionReport", "version", version_of + "Test Conclusion Report."},
      {"TestConclusionReport", "description", description_of + "Test Conclusion Report."},
      {"TestContextEntity", "name", name_of + "Test Context Entity."},
      {"TestContextEntity", "description", description_of + "Test Context Entity."},
      {"TestGoal", "label", "Label that identifies a Test Goal uniquely."},
      {"TestGoal", "statement", aim},
      {"TestGoal", "purpose", "The rationale for achieving the specified Test Goal."},
      {"TestGoal", "success_criteria",
       "The set of conditions by which the Test Goal will be judged as successful for stakeholders."},
      {"TestInformationNeed", "label", "Label that identifies a Test Information Need uniquely."},
      {"TestInformationNeed", "statement", aim},
      {"TestInformationNeed", "purpose",
       "The rationale for achieving the specified Test Information Need goal, which basically consists on "
       "analyze to provide information."},
      {"TestParticularSituation", "positive_statement",
       "An explicit declaration of a Test Particular Situation to be defined, which can refer to a static or "
       "dynamic situation."},
      {"TestParticularSituation", "model_specification",
       "It represents an Artifact that specifies and models Test Particular Situations in a given language."},
      {"TestParticularSituation", "conditions",
       "Any kind of constraint that must be fulfilled in the Test Particular Situation."},
      {"TestProject", "name", name_of + "Test Project."},
      {"TestRequirement", "label", "Label that identifies a Test Requirement uniquely."},
      {"TestRequirement", "statement", "An explicit declaration of the Test Requirement to be satisfied."},
      {"TestRequirement", "testable_entity_phase",
       "It indicates the stage of the testable-entity life cycle in which the Testable Entity is."},
      {"TestRequirement", "test_level",
       "It represents a kind of test that delimits the scope of the Testable Entity and its context taking into "
       "account the Test Requirement statement."},
      {"TestRequirement", "completion_criteria",
       "The set of conditions by which the Test Requirement will be judged as complete for stakeholders."},
      {"TestResult", "name", name_of + "Test Result work product."},
      {"TestResult", "description", description_of + "Test Result."},
      {"TestSpecification", "name", name_of + "Test Specification artifact."},
      {"TestSpecification", "version", version_of + "Test Specification artifact."},
      {"TestableEntity", "name", name_of + "Testable Entity."},
      {"TestableEntity", "description", description_of + "Testable Entity."},
      {"Testing", "name", name_of + "Testing work process."},
      {"Testing", "work_description",
       "Specification of what to do for achieving the objective of a Testing Work Process."},
      {"TestingActivity", "name", name_of + "Testing Activity."},
      {"TestingActivity", "work_description",
       "Specification of what to do for achieving the objective of a Testing Activity."},
      {"TestingAgent", "name", name_of + "Testing Agent."},
      {"TestingAgent", "capabilities", "Set of abilities that the Testing Agent has."},
      {"TestingDesignMethod", "design_procedure",
       "Arranged set of Testing Design Method's instructions or operations, which specifies how must be "
       "performed the Design Testing activity using the Test Basis, if any."},
      {"TestingMethod", "name", name_of + "Testing Method."},
      {"TestingMethod", "rule",
       "Set of principles, conditions, heuristics, axioms, etc. associated to the design procedure or "
       "Realization Procedure."},
      {"TestingRole", "name", name_of + "Testing Role."},
      {"TestingRole", "skills", "Set of capabilities, competencies and responsibilities of a role."},
      {"TestingStrategy", "name", name_of + "Testing Strategy."},
      {"TestingTool", "name", name_of + "Testing Tool."},
      {"TestingTool", "description", description_of + "Testing Tool."},
  };
}

// Multiplicities follow one mechanical reading of each sentence:
//   "a/an X"                                    -> 1..1
//   "one or more", "one or several"             -> 1..*
//   "none or many", "none or several", "if any" -> 0..*
// Source-side bounds are only set where an "In turn, ..." sentence states
// the inverse (involves, plays, verifies_validates). Every other inverse is
// unchecked (0..*), e.g. a Test Basis may be consumed by no Design Testing.
constexpr Multiplicity kOne{1, 1};
constexpr Multiplicity kSome{1, std::nullopt};
constexpr Multiplicity kAny{0, std::nullopt};

RelationshipDef rel(std::string name, std::string source, std::string target, Multiplicity target_mult,
                    std::string sentence, Multiplicity source_mult = kAny) {
  return {std::move(name), std::move(source), std::move(target), source_mult, target_mult,
          std::move(sentence)};
}

std::vector<RelationshipDef> relationships() {
  return {
      rel("adopts", "TestingManagement", "TestingLifeCycle", kOne,
          "A Testing Management process adopts a Testing Life Cycle."),
      rel("associates", "TestProject", "TestingStrategy", kSome,
          "A Test Project associates one or more Testing Strategies."),
      rel("consumes", "AnalyzeTestResults", "TestResult", kSome,
          "An Analyze Test Results activity consumes one or more Test Result as work product."),
      rel("consumes", "PerformTesting", "TestSpecification", kSome,
          "A Perform Testing activity consumes one or more Test Specification as artifact."),
      rel("consumes", "AnalyzeTestResults", "TestSpecification", kSome,
          "An Analyze Test Results activity consumes one or more Test Specification as artifact."),
      rel("consumes", "DesignTesting", "TestBasis", kAny, "A Design Testing activity consumes Test Basis, if any."),
      rel("consumes", "Testing", "TestParticularSituationSpecification", kSome,
          "A Testing work process can consume one or more Test Particular Situation's model specifications as "
          "Artifacts."),
      rel("consumes", "Testing", "TestRequirementSpecification", kSome,
          "A Testing work process can consume one or more Test Requirement's specifications as Artifacts."),
      rel("deals_with_test_environment", "TestParticularSituation", "TestContextEntity", kAny,
          "A Test Particular Situation deals with none or many concrete Test Context Entities as a test "
          "environment."),
      rel("deals_with_test_target", "TestParticularSituation", "TestableEntity", kSome,
          "A Test Particular Situation deals with one or more concrete Testable Entities as a test target."),
      rel("defines", "TestProject", "TestParticularSituation", kSome,
          "A Test Project defines one or several Test Particular Situations."),
      rel("helps_to_achieve", "TestingStrategy", "TestGoal", kSome,
          "A Testing Strategy gives support for achieving one or more Test Goals."),
      rel("implies", "TestGoal", "TestParticularSituation", kSome,
          "A Test Goal implies one or more Test Particular Situations."),
      rel("influences", "TestContextEntity", "TestableEntity", kSome,
          "A Test Context Entity influences one or several Testable Entities."),
      rel("involves", "Testing", "TestingRole", kSome,
          "A Testing Work Process involves one or more Testing Roles. In turn, a Testing Role may participate in "
          "one or more Testing Work Process.",
          kSome),
      rel("is_assigned_to", "StaticTestingMethod", "PerformStaticTesting", kSome,
          "A Static Testing Method is assigned to one or more Perform Static Testing activities."),
      rel("is_assigned_to", "DynamicTestingMethod", "PerformDynamicTesting", kSome,
          "A Dynamic Testing Method is assigned to one or more Perform Dynamic Testing activities."),
      rel("is_assigned_to", "TestingDesignMethod", "DesignTesting", kSome,
          "A Testing Design Method is assigned to one or more Design Testing activities."),
      rel("is_assigned_to", "TestingAgent", "TestingActivity", kSome,
          "A Testing Agent is assigned to one or more Testing Activities."),
      rel("is_based_on", "RealizationProcedure", "TestSpecification", kAny,
          "A Realization Procedure is based on none or several Test Specifications."),
      rel("is_based_on", "TestRequirement", "TestBasis", kAny,
          "A Test Requirement is based on none or several Test Basis."),
      rel("is_derived_in", "TestGoal", "TestRequirement", kSome,
          "A Test Goal is derived in one or more Test Requirements."),
      rel("is_linked_to", "TestBasis", "NonFunctionalRequirement", kAny,
          "A Test Basis is linked to none or several Non-Functional Requirements."),
      rel("is_linked_to", "TestBasis", "FunctionalRequirement", kAny,
          "A Test Basis is linked to none or several Functional Requirements."),
      rel("is_managed_by", "TestProject", "TestingManagement", kOne,
          "A Test Project is managed by means of a Testing Management process."),
      rel("is_supported_by", "TestGoal", "TestInformationNeed", kSome,
          "A Test Goal is supported by one or more Test Information Needs."),
      rel("operationalizes", "TestProject", "TestGoal", kSome,
          "A Test Project operationalizes one or more Test Goals."),
      rel("plays", "TestingAgent", "TestingRole", kSome,
          "A Testing Agent plays one or more Testing Roles. In turn, a Testing Role is played by one or more "
          "Testing Agents.",
          kSome),
      rel("produces", "TestingManagement", "TestPlan", kOne,
          "A Testing Management process produces a Test Plan as artifact."),
      rel("produces", "PerformTesting", "TestResult", kOne,
          "A Perform Testing activity produces a Test Result as work product."),
      rel("produces", "AnalyzeTestResults", "TestConclusionReport", kOne,
          "An Analyze Test Results activity produces a Test Conclusion Report as artifact."),
      rel("produces", "DesignTesting", "RealizationProcedure", kSome,
          "A Design Testing activity produces one or more Realization Procedure."),
      rel("produces", "DesignTesting", "TestSpecification", kSome,
          "A Design Testing activity produces one or more Test Specification as artifact."),
      rel("refers_to", "TestRequirement", "TestableEntity", kOne,
          "A Test Requirement in its statement always refers to a Testable Entity."),
      rel("refers_to", "TestRequirement", "TestContextEntity", kSome,
          "A Test Requirement can refer to a one or more Test Context Entities."),
      rel("relies_on", "Incident", "ActualResult", kAny,
          "An Incident detected in a Perform Testing activity relies on none or several Actual Results."),
      rel("requires_as_input", "Testing", "TestableEntity", kOne,
          "A Testing process needs a Testable Entity as input."),
      rel("requires_as_input", "Testing", "TestContextEntity", kAny,
          "A Testing process needs none or many Test Context Entities as input."),
      rel("surrounded_by", "TestableEntity", "TestContextEntity", kSome,
          "A Testable Entity is surrounded by one or several Test Context Entities."),
      rel("takes_into_account", "AnalyzeTestResults", "TestInformationNeed", kSome,
          "An Analyze Test Results activity consumes one or more Test Information Needs as a specification."),
      rel("uses", "TestingLifeCycle", "TestingStrategy", kSome,
          "A Testing Life Cycle uses one or more Testing Strategies."),
      rel("uses", "TestingAgent", "TestingTool", kAny, "A Testing Agent uses Testing Tools, if any."),
      rel("verifies_validates", "TestSpecification", "TestableEntity", kSome,
          "A Test Specification verifies/validates one or more Testable Entities. In turn, a Testable Entity is "
          "verified/validated by one or more Test Specifications.",
          kSome),
  };
}

// Links that axiom consequents require from a Testing Activity although no
// relationship row has an activity as source.
std::vector<LinkSignature> axiom_signatures() {
  return {
      {"requires_as_input", "TestingActivity", "TestableEntity"},       // A12, A13
      {"requires_as_input", "TestingActivity", "TestContextEntity"},    // A14
      {"consumes", "TestingActivity", "TestRequirementSpecification"},  // A15
      {"consumes", "TestingActivity", "TestParticularSituationSpecification"},  // A16
      {"involves", "TestingActivity", "TestingRole"},                   // A17
  };
}

}  // namespace

const Schema& builtin_schema() {
  static const Schema schema = [] {
    Schema s(terms(), taxonomy(), attributes(), relationships(), axiom_signatures(), {"part_of", "specifies"});
    auto problems = integrity_problems(s);
    if (!problems.empty()) throw SchemaIntegrityError("builtin schema self-check failed: " + problems.front());
    return s;
  }();
  return schema;
}

}  // namespace testtdo
