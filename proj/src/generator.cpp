#include "generator.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "axioms.hpp"
#include "validator.hpp"

namespace testtdo::generator {
namespace {

// Deterministic across platforms: mt19937_64 is fully specified by the C++
// standard, and bounded draws use plain modulo reduction instead of the
// implementation-defined std::uniform_int_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool coin() { return (engine_() & 1U) != 0; }

 private:
  std::mt19937_64 engine_;
};

struct NewIndividual {
  std::string id, type;
  AttrMap attrs;
};

struct SetAttr {
  std::string id, attr, value;
};

// One growth step. Deltas are kept so the repair loop can replay them.
struct Delta {
  std::vector<NewIndividual> individuals;
  std::vector<Link> links;
  std::vector<SetAttr> attrs;

  void add(std::string id, std::string type, AttrMap a = {}) {
    individuals.push_back({std::move(id), std::move(type), std::move(a)});
  }
  void link(std::string rel, std::string s, std::string t) {
    links.push_back({std::move(rel), std::move(s), std::move(t)});
  }
};

struct Draft {
  std::map<std::string, NewIndividual> individuals;
  std::set<Link> links;

  void apply(const Delta& d) {
    for (const auto& i : d.individuals) individuals.emplace(i.id, i);
    links.insert(d.links.begin(), d.links.end());
    for (const auto& s : d.attrs) {
      auto it = individuals.find(s.id);
      if (it != individuals.end()) it->second.attrs[s.attr] = s.value;
    }
  }

  std::optional<KnowledgeBase> build() const {
    KnowledgeBase kb;
    for (const auto& [id, i] : individuals) kb.add_individual(i.id, i.type, i.attrs);
    for (const auto& l : links) kb.add_link(l.rel_name, l.source, l.target);
    try {
      kb.finalize();
    } catch (const DanglingReferenceError&) {
      return std::nullopt;
    }
    return kb;
  }
};

enum class DesignMode { Free, SpecificationBased, StructureBased };

struct Cluster {
  std::string suffix;
  std::string prt_type = "PerformTesting";
  DesignMode design = DesignMode::Free;
  std::vector<std::string> activities;
  std::vector<std::string> roles;

  std::string operator()(const char* base) const { return base + suffix; }
};

std::string add_tag(const std::string& current, const std::string& tag) {
  return current.empty() ? tag : current + "," + tag;
}

// The smallest model closing every lower bound and every axiom: one project
// with its goal, strategy, management and life cycle, one Testing process
// with its three activities, and the specifications and results they need.
Delta motif(const Cluster& c, const std::string& label) {
  Delta d;
  d.add(c("tp"), "TestProject", {{"name", "Test project " + label}});
  d.add(c("tg"), "TestGoal", {{"label", "G" + label}, {"purpose", "verify"}, {"statement", "Verify release " + label}});
  d.add(c("tin"), "TestInformationNeed", {{"label", "N" + label}});
  d.add(c("strat"), "TestingStrategy", {{"name", "Strategy " + label}});
  d.add(c("tm"), "TestingManagement");
  d.add(c("tlc"), "TestingLifeCycle");
  d.add(c("plan"), "TestPlan");
  d.add(c("tps"), "TestParticularSituation", {{"positive_statement", "Nominal use " + label}});
  d.add(c("te"), "TestableEntity", {{"name", "Component " + label}});
  d.add(c("tce"), "TestContextEntity", {{"name", "Environment " + label}});
  d.add(c("treq"), "TestRequirement", {{"label", "R" + label}, {"test_level", "system"}});
  d.add(c("proc"), "Testing", {{"name", "Testing " + label}});
  d.add(c("dt"), "DesignTesting");
  d.add(c("prt"), c.prt_type);
  d.add(c("atr"), "AnalyzeTestResults");
  d.add(c("tc"), "TestCase", {{"expected_result", "pass"}, {"input", "case " + label}});
  d.add(c("rp"), "RealizationProcedure");
  d.add(c("ar"), "ActualResult", {{"value", "pass"}});
  d.add(c("tcr"), "TestConclusionReport");
  d.add(c("role"), "TestingRole", {{"name", "Tester"}});
  d.add(c("agent"), "TestingHumanAgent", {{"name", "Agent " + label}});
  d.add(c("tdm"), "TestingDesignMethod");
  d.add(c("trs"), "TestRequirementSpecification");
  d.add(c("tpss"), "TestParticularSituationSpecification");

  d.link("adopts", c("tm"), c("tlc"));
  d.link("associates", c("tp"), c("strat"));
  d.link("consumes", c("atr"), c("ar"));
  d.link("consumes", c("prt"), c("tc"));
  d.link("consumes", c("atr"), c("tc"));
  d.link("consumes", c("proc"), c("tpss"));
  d.link("consumes", c("proc"), c("trs"));
  d.link("deals_with_test_target", c("tps"), c("te"));
  d.link("defines", c("tp"), c("tps"));
  d.link("helps_to_achieve", c("strat"), c("tg"));
  d.link("implies", c("tg"), c("tps"));
  d.link("influences", c("tce"), c("te"));
  d.link("involves", c("proc"), c("role"));
  d.link("is_assigned_to", c("agent"), c("dt"));
  d.link("is_assigned_to", c("tdm"), c("dt"));
  d.link("is_derived_in", c("tg"), c("treq"));
  d.link("is_managed_by", c("tp"), c("tm"));
  d.link("is_supported_by", c("tg"), c("tin"));
  d.link("operationalizes", c("tp"), c("tg"));
  d.link("plays", c("agent"), c("role"));
  d.link("produces", c("tm"), c("plan"));
  d.link("produces", c("prt"), c("ar"));
  d.link("produces", c("atr"), c("tcr"));
  d.link("produces", c("dt"), c("rp"));
  d.link("produces", c("dt"), c("tc"));
  d.link("refers_to", c("treq"), c("te"));
  d.link("refers_to", c("treq"), c("tce"));
  d.link("requires_as_input", c("proc"), c("te"));
  d.link("surrounded_by", c("te"), c("tce"));
  d.link("takes_into_account", c("atr"), c("tin"));
  d.link("uses", c("tlc"), c("strat"));
  d.link("verifies_validates", c("tc"), c("te"));
  d.link("part_of", c("dt"), c("proc"));
  d.link("part_of", c("prt"), c("proc"));
  d.link("part_of", c("atr"), c("proc"));
  // Axiom closure: A13, A15, A16, A17.
  d.link("requires_as_input", c("prt"), c("te"));
  d.link("consumes", c("dt"), c("trs"));
  d.link("consumes", c("dt"), c("tpss"));
  d.link("involves", c("dt"), c("role"));
  d.link("specifies", c("trs"), c("treq"));
  d.link("specifies", c("tpss"), c("tps"));
  d.link("is_based_on", c("rp"), c("tc"));
  return d;
}

// A Test Basis linked to a (non-)functional requirement, which makes the
// cluster's Testable Entity Developable (Evaluable) via A6 (A5).
void add_requirement(Delta& d, const Cluster& c, bool functional, bool has_basis, const std::string& current_tags) {
  const std::string req = functional ? c("fr") : c("nfr");
  d.add(req, functional ? "FunctionalRequirement" : "NonFunctionalRequirement");
  if (!has_basis) d.add(c("tb"), "TestBasis", {{"name", "Requirements " + c.suffix}});
  d.link("is_linked_to", c("tb"), req);
  d.link("consumes", c("dt"), c("tb"));
  d.link("is_based_on", c("treq"), c("tb"));
  d.attrs.push_back({c("te"), "classification", add_tag(current_tags, functional ? "DevelopableEntity" : "EvaluableEntity")});
}

class Growth {
 public:
  explicit Growth(std::uint64_t seed) : rng_(seed) {}

  Delta new_cluster(bool fixed) {
    Cluster c;
    c.suffix = clusters_.empty() ? "" : std::to_string(clusters_.size() + 1);
    if (!fixed) {
      static const char* kinds[] = {"PerformTesting", "PerformStaticTesting", "PerformDynamicTesting",
                                    "PerformFunctionalDynamicTesting", "PerformNonFunctionalDynamicTesting"};
      c.prt_type = kinds[rng_.below(5)];
    }
    c.activities = {c("dt"), c("prt"), c("atr")};
    c.roles = {c("role")};
    Delta d = motif(c, clusters_.empty() ? "1" : c.suffix);
    if (c.prt_type == "PerformFunctionalDynamicTesting") add_requirement(d, c, true, false, "");
    if (c.prt_type == "PerformNonFunctionalDynamicTesting") add_requirement(d, c, false, false, "");
    clusters_.push_back(std::move(c));
    return d;
  }

  Delta small_unit(const Draft& draft) {
    Cluster& c = clusters_[rng_.below(clusters_.size())];
    const std::string n = std::to_string(++counter_);
    Delta d;
    switch (rng_.below(9)) {
      case 0: {  // another specification designed and verified in this cluster
        static const char* types[] = {"TestCase", "TestChecklist", "TestSuite"};
        const std::string type = types[rng_.below(3)];
        const std::string id = "spec_" + n;
        AttrMap attrs{{"version", "1." + n}};
        if (type == "TestCase") attrs["expected_result"] = "pass";
        if (type == "TestChecklist") attrs["item_description"] = "check item " + n;
        d.add(id, type, attrs);
        d.link("produces", c("dt"), id);
        d.link("verifies_validates", id, c("te"));
        if (rng_.coin()) d.link("consumes", c("prt"), id);
        if (rng_.coin()) d.link("consumes", c("atr"), id);
        break;
      }
      case 1: {
        const std::string id = "tool_" + n;
        d.add(id, "TestingTool", {{"name", "Tool " + n}});
        d.link("uses", c("agent"), id);
        break;
      }
      case 2: {
        const std::string id = "agent_" + n;
        d.add(id, rng_.coin() ? "TestingAutomatedAgent" : "TestingHumanAgent", {{"name", "Agent " + n}});
        d.link("plays", id, c.roles[rng_.below(c.roles.size())]);
        d.link("is_assigned_to", id, c.activities[rng_.below(c.activities.size())]);
        break;
      }
      case 3: {
        const std::string id = "ctx_" + n;
        d.add(id, "TestContextEntity", {{"name", "Context " + n}});
        d.link("influences", id, c("te"));
        if (rng_.coin()) d.link("surrounded_by", c("te"), id);
        if (rng_.coin()) d.link("deals_with_test_environment", c("tps"), id);
        if (rng_.coin()) d.link("refers_to", c("treq"), id);
        if (rng_.coin()) {
          d.link("requires_as_input", c("proc"), id);
          d.link("requires_as_input", c.activities[rng_.below(c.activities.size())], id);  // A14
        }
        break;
      }
      case 4: {
        const std::string id = "method_" + n;
        std::vector<std::string> options{"ExperienceBasedMethod"};
        if (c.design != DesignMode::StructureBased) options.push_back("SpecificationBasedMethod");
        if (c.design != DesignMode::SpecificationBased) options.push_back("StructureBasedMethod");
        if (c.prt_type == "PerformStaticTesting") options.push_back("StaticTestingMethod");
        if (c.prt_type.find("Dynamic") != std::string::npos) options.push_back("DynamicTestingMethod");
        const std::string type = options[rng_.below(options.size())];
        d.add(id, type, {{"name", "Method " + n}});
        if (type == "StaticTestingMethod" || type == "DynamicTestingMethod") {
          d.link("is_assigned_to", id, c("prt"));
        } else {
          d.link("is_assigned_to", id, c("dt"));
        }
        if (type == "SpecificationBasedMethod") {  // A10: consume a Test Basis, require no Testable Entity
          c.design = DesignMode::SpecificationBased;
          if (!draft.individuals.count(c("tb"))) d.add(c("tb"), "TestBasis", {{"name", "Requirements " + c.suffix}});
          d.link("consumes", c("dt"), c("tb"));
        }
        if (type == "StructureBasedMethod") {  // A12
          c.design = DesignMode::StructureBased;
          d.link("requires_as_input", c("dt"), c("te"));
        }
        break;
      }
      case 5: {
        const std::string id = "item_" + n;
        d.add(id, "TestItem", {{"name", "Item " + n}});
        d.link("surrounded_by", id, c("tce"));
        d.link("verifies_validates", c("tc"), id);
        if (rng_.coin()) d.link("deals_with_test_target", c("tps"), id);
        break;
      }
      case 6: {
        const std::string id = "role_" + n;
        d.add(id, "TestingRole", {{"name", "Role " + n}, {"skills", "analysis"}});
        d.link("plays", c("agent"), id);
        d.link("involves", c("proc"), id);
        d.link("involves", c.activities[rng_.below(c.activities.size())], id);  // A17
        c.roles.push_back(id);
        break;
      }
      case 7: {
        const std::string id = "incident_" + n;
        d.add(id, "Incident", {{"version", "1"}});
        d.link("relies_on", id, c("ar"));
        d.link("consumes", c("atr"), id);
        break;
      }
      default: {
        const bool functional = rng_.coin();
        const std::string req = functional ? c("fr") : c("nfr");
        if (draft.individuals.count(req)) {
          const std::string id = "tool_" + n;
          d.add(id, "TestingTool");
          d.link("uses", c("agent"), id);
          break;
        }
        const auto te = draft.individuals.find(c("te"));
        const std::string tags = te == draft.individuals.end() || !te->second.attrs.count("classification")
                                     ? std::string()
                                     : te->second.attrs.at("classification");
        add_requirement(d, c, functional, draft.individuals.count(c("tb")) > 0, tags);
        break;
      }
    }
    return d;
  }

  std::size_t choose_cluster(std::size_t remaining) { return remaining >= motif_size() && rng_.below(4) == 0; }

 private:
  Rng rng_;
  std::vector<Cluster> clusters_;
  std::size_t counter_ = 0;
};

bool conforming(const Draft& draft) {
  auto kb = draft.build();
  return kb && validator::validate(*kb, builtin_schema(), validator::Mode::Complete).verdict ==
                   validator::Verdict::Pass;
}

}  // namespace

std::size_t motif_size() {
  static const std::size_t n = [] {
    Growth g(0);
    return g.new_cluster(true).individuals.size();
  }();
  return n;
}

KnowledgeBase generate_conforming(const GenConfig& config) {
  if (config.size > kMaxSize) {
    throw std::invalid_argument("size " + std::to_string(config.size) + " exceeds " + std::to_string(kMaxSize));
  }
  Growth growth(config.seed);
  Draft draft;
  std::vector<Delta> steps;
  steps.push_back(growth.new_cluster(true));
  draft.apply(steps.back());
  while (draft.individuals.size() < config.size) {
    const std::size_t remaining = config.size - draft.individuals.size();
    steps.push_back(growth.choose_cluster(remaining) ? growth.new_cluster(false) : growth.small_unit(draft));
    draft.apply(steps.back());
  }
  if (conforming(draft)) return *draft.build();

  // Repair: replay the steps, keeping only those that preserve conformance.
  Draft repaired;
  for (const auto& step : steps) {
    Draft candidate = repaired;
    candidate.apply(step);
    if (conforming(candidate)) repaired = std::move(candidate);
  }
  return *repaired.build();
}

// ---------------------------------------------------------------------------
// Perturbation

namespace {

struct Edit {
  std::vector<Link> remove_links;
  std::vector<Link> add_links;
  std::vector<NewIndividual> add_individuals;
  std::optional<std::pair<std::string, std::string>> retype;  // id, new type
  std::optional<SetAttr> set_attr;
};

KnowledgeBase apply(const KnowledgeBase& kb, const Edit& e) {
  KnowledgeBase out;
  for (const auto& [id, ind] : kb.individuals()) {
    std::string type = ind.type_name;
    AttrMap attrs = ind.attrs;
    if (e.retype && e.retype->first == id) type = e.retype->second;
    if (e.set_attr && e.set_attr->id == id) {
      if (e.set_attr->value.empty()) {
        attrs.erase(e.set_attr->attr);
      } else {
        attrs[e.set_attr->attr] = e.set_attr->value;
      }
    }
    out.add_individual(id, type, std::move(attrs));
  }
  for (const auto& i : e.add_individuals) out.add_individual(i.id, i.type, i.attrs);
  for (const auto& l : kb.links()) {
    if (std::find(e.remove_links.begin(), e.remove_links.end(), l) == e.remove_links.end()) {
      out.add_link(l.rel_name, l.source, l.target);
    }
  }
  for (const auto& l : e.add_links) out.add_link(l.rel_name, l.source, l.target);
  out.finalize();
  return out;
}

class Sites {
 public:
  Sites(const KnowledgeBase& kb, const Schema& schema) : kb_(kb), schema_(schema) {}

  bool isa(const std::string& id, std::string_view type) const {
    const auto& t = kb_.individual(id).type_name;
    return schema_.has_term(t) && schema_.is_subtype(t, type);
  }

  std::vector<Link> links(std::string_view rel, std::string_view source_type, std::string_view target_type) const {
    std::vector<Link> out;
    for (const auto& l : kb_.links()) {
      if (l.rel_name == rel && isa(l.source, source_type) && isa(l.target, target_type)) out.push_back(l);
    }
    return out;
  }

  std::vector<std::string> ids(std::string_view type) const { return kb_.instances_of(schema_, type, true); }

  std::vector<Edit> removals(std::string_view rel, std::string_view source_type, std::string_view target_type) const {
    std::vector<Edit> out;
    for (auto& l : links(rel, source_type, target_type)) out.push_back({{l}, {}, {}, {}, {}});
    return out;
  }

  std::vector<Edit> retypes(std::string_view from, const std::string& to) const {
    std::vector<Edit> out;
    for (const auto& id : ids(from)) {
      if (kb_.individual(id).type_name != to) out.push_back({{}, {}, {}, std::make_pair(id, to), {}});
    }
    return out;
  }

 private:
  const KnowledgeBase& kb_;
  const Schema& schema_;
};

std::string fresh_id(const KnowledgeBase& kb, const std::string& base) {
  for (std::size_t i = 1;; ++i) {
    std::string id = base + "_extra" + std::to_string(i);
    if (!kb.contains(id)) return id;
  }
}

std::string lower_first(std::string s) {
  if (!s.empty() && s[0] >= 'A' && s[0] <= 'Z') s[0] = static_cast<char>(s[0] - 'A' + 'a');
  return s;
}

std::vector<Edit> axiom_edits(const KnowledgeBase& kb, const Schema& schema, const std::string& id) {
  Sites s(kb, schema);
  std::vector<Edit> out;
  auto append = [&](std::vector<Edit> more) { out.insert(out.end(), more.begin(), more.end()); };
  // A fresh individual reached from a Testing process but from none of its
  // activities.
  auto unshared_input = [&](const std::string& rel, const std::string& type) {
    std::vector<Edit> edits;
    const std::string fresh = fresh_id(kb, lower_first(type));
    for (const auto& p : s.ids("Testing")) edits.push_back({{}, {{rel, p, fresh}}, {{fresh, type, {}}}, {}, {}});
    return edits;
  };
  auto toggle_tag = [&](const std::string& tag_name) {
    for (const auto& te : s.ids("TestableEntity")) {
      const auto& attrs = kb.individual(te).attrs;
      auto it = attrs.find(fol::kClassificationAttr);
      std::vector<std::string> tags = it == attrs.end() ? std::vector<std::string>{} : fol::split_tags(it->second);
      auto pos = std::find(tags.begin(), tags.end(), tag_name);
      if (pos == tags.end()) {
        tags.push_back(tag_name);
      } else {
        tags.erase(pos);
      }
      std::string value;
      for (const auto& t : tags) value = add_tag(value, t);
      out.push_back({{}, {}, {}, {}, SetAttr{te, std::string(fol::kClassificationAttr), value}});
    }
  };

  if (id == "A1") {
    for (const auto& l : s.links("produces", "PerformTesting", "TestResult")) {
      out.push_back({{}, {}, {}, std::make_pair(l.target, std::string("TestResult")), {}});
    }
  } else if (id == "A2") {
    append(s.removals("part_of", "TestingActivity", "Testing"));
    // A bare process has none of the links A13-A17 look at.
    const std::string bare = fresh_id(kb, "testing");
    out.push_back({{}, {}, {{bare, "Testing", {}}}, {}, {}});
  } else if (id == "A3" || id == "A4") {
    const std::string kind =
        id == "A3" ? "PerformFunctionalDynamicTesting" : "PerformNonFunctionalDynamicTesting";
    append(s.retypes("PerformTesting", kind));
    append(s.removals("is_linked_to", "TestBasis", id == "A3" ? "FunctionalRequirement" : "NonFunctionalRequirement"));
    // A consumed specification that no design activity produced.
    const std::string spec = fresh_id(kb, "testCase");
    for (const auto& prt : s.ids("PerformTesting")) {
      out.push_back({{}, {{"consumes", prt, spec}}, {{spec, "TestCase", {}}}, std::make_pair(prt, kind), {}});
    }
  } else if (id == "A5") {
    toggle_tag("EvaluableEntity");
  } else if (id == "A6") {
    toggle_tag("DevelopableEntity");
  } else if (id == "A7") {
    for (const auto& prt : s.ids("PerformTesting")) {
      Edit e;
      for (const auto& l : s.links("consumes", "PerformTesting", "TestSpecification")) {
        if (l.source == prt) e.remove_links.push_back(l);
      }
      if (!e.remove_links.empty()) out.push_back(std::move(e));
    }
  } else if (id == "A8") {
    append(s.removals("helps_to_achieve", "TestingStrategy", "TestGoal"));
  } else if (id == "A9") {
    append(s.removals("operationalizes", "TestProject", "TestGoal"));
  } else if (id == "A10") {
    append(s.retypes("TestingDesignMethod", "SpecificationBasedMethod"));
    append(s.removals("consumes", "DesignTesting", "TestBasis"));
    // A fresh specification-based method on a design activity that also
    // takes a Testable Entity as input.
    const std::string method = fresh_id(kb, "specificationBasedMethod");
    const auto entities = s.ids("TestableEntity");
    for (const auto& l : s.links("produces", "DesignTesting", "TestSpecification")) {
      for (const auto& te : entities) {
        out.push_back({{},
                       {{"is_assigned_to", method, l.source}, {"requires_as_input", l.source, te}},
                       {{method, "SpecificationBasedMethod", {}}},
                       {},
                       {}});
      }
    }
  } else if (id == "A11") {
    for (const auto& ar : s.ids("ActualResult")) {
      const auto& attrs = kb.individual(ar).attrs;
      auto it = attrs.find("value");
      const std::string value = it == attrs.end() || it->second != "mismatch" ? "mismatch" : "other mismatch";
      out.push_back({{}, {}, {}, {}, SetAttr{ar, "value", value}});
    }
  } else if (id == "A12") {
    append(s.retypes("TestingDesignMethod", "StructureBasedMethod"));
    append(s.removals("requires_as_input", "DesignTesting", "TestableEntity"));
  } else if (id == "A13") {
    append(s.removals("requires_as_input", "TestingActivity", "TestableEntity"));
    append(unshared_input("requires_as_input", "TestableEntity"));
  } else if (id == "A14") {
    for (const auto& p : s.ids("Testing")) {
      for (const auto& tce : s.ids("TestContextEntity")) {
        if (!kb.has_link("requires_as_input", p, tce)) out.push_back({{}, {{"requires_as_input", p, tce}}, {}, {}, {}});
      }
    }
    append(s.removals("requires_as_input", "TestingActivity", "TestContextEntity"));
    append(unshared_input("requires_as_input", "TestContextEntity"));
  } else if (id == "A15") {
    append(s.removals("consumes", "TestingActivity", "TestRequirementSpecification"));
    append(unshared_input("consumes", "TestRequirementSpecification"));
  } else if (id == "A16") {
    append(s.removals("consumes", "TestingActivity", "TestParticularSituationSpecification"));
    append(unshared_input("consumes", "TestParticularSituationSpecification"));
  } else if (id == "A17") {
    append(s.removals("involves", "TestingActivity", "TestingRole"));
    append(unshared_input("involves", "TestingRole"));
  }
  return out;
}

std::vector<Edit> upper_edits(const KnowledgeBase& kb, const Schema& schema) {
  Sites s(kb, schema);
  std::vector<Edit> with_existing, with_new;
  for (const auto& r : schema.relationships()) {
    if (!r.target_mult.max) continue;
    for (const auto& src : s.ids(r.source)) {
      for (const auto& tgt : s.ids(r.target)) {
        if (!kb.has_link(r.rel_name, src, tgt)) with_existing.push_back({{}, {{r.rel_name, src, tgt}}, {}, {}, {}});
      }
      const std::string id = fresh_id(kb, lower_first(r.target));
      with_new.push_back({{}, {{r.rel_name, src, id}}, {{id, r.target, {}}}, {}, {}});
    }
  }
  with_existing.insert(with_existing.end(), with_new.begin(), with_new.end());
  return with_existing;
}

std::vector<Edit> lower_edits(const KnowledgeBase& kb, const Schema& schema) {
  std::vector<Edit> out;
  for (const auto& l : kb.links()) {
    if (!schema.is_builtin_relation(l.rel_name)) out.push_back({{l}, {}, {}, {}, {}});
  }
  return out;
}

}  // namespace

KnowledgeBase perturb(const KnowledgeBase& kb, std::uint64_t seed, const PerturbKind& kind) {
  const Schema& schema = builtin_schema();
  using validator::Mode;
  if (kind.family == PerturbFamily::Axiom) {
    try {
      (void)axioms::axiom(kind.axiom_id);
    } catch (const NotFoundError& e) {
      throw std::invalid_argument(e.what());
    }
  }

  if (validator::validate(kb, schema, Mode::Complete).verdict != validator::Verdict::Pass) {
    throw NotApplicableError("input KB does not pass complete-mode validation");
  }

  std::vector<Edit> edits;
  std::function<bool(const validator::ValidationReport&)> hit;
  switch (kind.family) {
    case PerturbFamily::CardinalityLower:
      edits = lower_edits(kb, schema);
      hit = [](const auto& r) {
        return std::any_of(r.diagnostics.begin(), r.diagnostics.end(),
                           [](const auto& d) { return d.code == validator::kLowerBound; });
      };
      break;
    case PerturbFamily::CardinalityUpper:
      edits = upper_edits(kb, schema);
      hit = [](const auto& r) {
        return std::any_of(r.diagnostics.begin(), r.diagnostics.end(),
                           [](const auto& d) { return d.code == validator::kUpperBound; });
      };
      break;
    case PerturbFamily::Axiom: {
      edits = axiom_edits(kb, schema, kind.axiom_id);
      const std::string target = "AX-" + kind.axiom_id;
      hit = [target](const auto& r) {
        std::vector<std::string> ax;
        for (const auto& d : r.diagnostics) {
          if (d.axiom_id && d.code.rfind("AX-", 0) == 0) ax.push_back(d.code);
        }
        return ax == std::vector<std::string>{target};
      };
      break;
    }
  }

  const std::string what = kind.family == PerturbFamily::Axiom ? "axiom " + kind.axiom_id
                           : kind.family == PerturbFamily::CardinalityLower ? "cardinality_lower"
                                                                            : "cardinality_upper";
  if (edits.empty()) throw NotApplicableError(what + " is not injectable into this KB");
  const std::size_t start = static_cast<std::size_t>(seed % edits.size());
  for (std::size_t k = 0; k < edits.size(); ++k) {
    KnowledgeBase candidate = apply(kb, edits[(start + k) % edits.size()]);
    if (hit(validator::validate(candidate, schema, Mode::Complete))) return candidate;
  }
  throw NotApplicableError(what + " is not injectable into this KB with a single edit");
}

}  // namespace testtdo::generator
