#include "fol.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace testtdo::fol {

const std::vector<std::string>& classification_tags() {
  static const std::vector<std::string> tags{"DevelopableEntity", "EvaluableEntity"};
  return tags;
}

std::vector<std::string> split_tags(std::string_view value) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    std::size_t end = value.find(',', start);
    if (end == std::string_view::npos) end = value.size();
    std::string_view token = value.substr(start, end - start);
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.remove_suffix(1);
    if (!token.empty()) out.emplace_back(token);
    start = end + 1;
  }
  return out;
}

namespace {
FormulaPtr make(auto node) { return std::make_shared<const Formula>(Formula{std::move(node)}); }
}  // namespace

FormulaPtr forall(std::vector<std::string> vars, FormulaPtr body) { return make(Forall{std::move(vars), std::move(body)}); }
FormulaPtr exists(std::vector<std::string> vars, FormulaPtr body) { return make(Exists{std::move(vars), std::move(body)}); }
FormulaPtr all_of(std::vector<FormulaPtr> items) { return make(And{std::move(items)}); }
FormulaPtr any_of(std::vector<FormulaPtr> items) { return make(Or{std::move(items)}); }
FormulaPtr negate(FormulaPtr item) { return make(Not{std::move(item)}); }
FormulaPtr implies(FormulaPtr lhs, FormulaPtr rhs) { return make(Implies{std::move(lhs), std::move(rhs)}); }
FormulaPtr iff(FormulaPtr lhs, FormulaPtr rhs) { return make(Iff{std::move(lhs), std::move(rhs)}); }
FormulaPtr is(std::string type_name, std::string var) { return make(Is{std::move(type_name), std::move(var)}); }
FormulaPtr link(std::string rel_name, std::string source, std::string target) {
  return make(LinkAtom{std::move(rel_name), std::move(source), std::move(target)});
}
FormulaPtr attr_eq(AttrRef lhs, AttrRef rhs) { return make(AttrEq{std::move(lhs), std::move(rhs)}); }
FormulaPtr attr_neq(AttrRef lhs, AttrRef rhs) { return make(AttrNeq{std::move(lhs), std::move(rhs)}); }
FormulaPtr var_neq(std::string lhs, std::string rhs) { return make(VarNeq{std::move(lhs), std::move(rhs)}); }
FormulaPtr tag(std::string tag_name, std::string var) { return make(Tag{std::move(tag_name), std::move(var)}); }

// ---------------------------------------------------------------------------
// Well-formedness, printing

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

class WellFormed {
 public:
  WellFormed(const Schema& schema, const std::vector<std::string>& free) : schema_(schema), scope_(free) {}

  void check(const Formula& f) {
    std::visit(overloaded{
                   [&](const Forall& q) { quantifier(q.vars, q.body); },
                   [&](const Exists& q) { quantifier(q.vars, q.body); },
                   [&](const And& c) { items(c.items); },
                   [&](const Or& c) { items(c.items); },
                   [&](const Not& n) { sub(n.item); },
                   [&](const Implies& i) { sub(i.lhs); sub(i.rhs); },
                   [&](const Iff& i) { sub(i.lhs); sub(i.rhs); },
                   [&](const Is& a) {
                     if (!schema_.has_term(a.type_name)) throw FormulaError("unknown type '" + a.type_name + "'");
                     var(a.var);
                   },
                   [&](const LinkAtom& a) {
                     if (!schema_.is_relation_name(a.rel_name)) {
                       throw FormulaError("unknown relation '" + a.rel_name + "'");
                     }
                     var(a.source);
                     var(a.target);
                   },
                   [&](const AttrEq& a) { attr(a.lhs); attr(a.rhs); },
                   [&](const AttrNeq& a) { attr(a.lhs); attr(a.rhs); },
                   [&](const VarNeq& a) { var(a.lhs); var(a.rhs); },
                   [&](const Tag& a) {
                     const auto& tags = classification_tags();
                     if (std::find(tags.begin(), tags.end(), a.tag_name) == tags.end()) {
                       throw FormulaError("unknown classification tag '" + a.tag_name + "'");
                     }
                     var(a.var);
                   },
               },
               f.node);
  }

 private:
  void sub(const FormulaPtr& f) {
    if (!f) throw FormulaError("missing subformula");
    check(*f);
  }
  void items(const std::vector<FormulaPtr>& fs) {
    for (const auto& f : fs) sub(f);
  }
  void quantifier(const std::vector<std::string>& vars, const FormulaPtr& body) {
    if (vars.empty()) throw FormulaError("quantifier without variables");
    for (const auto& v : vars) scope_.push_back(v);
    sub(body);
    scope_.resize(scope_.size() - vars.size());
  }
  void var(const std::string& v) {
    if (std::find(scope_.begin(), scope_.end(), v) == scope_.end()) {
      throw FormulaError("unbound variable '" + v + "'");
    }
  }
  void attr(const AttrRef& r) {
    var(r.var);
    if (!schema_.is_attribute_name(r.attr)) throw FormulaError("unknown attribute '" + r.attr + "'");
  }

  const Schema& schema_;
  std::vector<std::string> scope_;
};

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += ' ';
    out += x;
  }
  return out;
}

void print(const Formula& f, std::string& out);

void print_list(const char* head, const std::vector<FormulaPtr>& items, std::string& out) {
  out += '(';
  out += head;
  for (const auto& i : items) {
    out += ' ';
    print(*i, out);
  }
  out += ')';
}

void print(const Formula& f, std::string& out) {
  std::visit(overloaded{
                 [&](const Forall& q) { out += "(forall (" + join(q.vars) + ") "; print(*q.body, out); out += ')'; },
                 [&](const Exists& q) { out += "(exists (" + join(q.vars) + ") "; print(*q.body, out); out += ')'; },
                 [&](const And& c) { print_list("and", c.items, out); },
                 [&](const Or& c) { print_list("or", c.items, out); },
                 [&](const Not& n) { print_list("not", {n.item}, out); },
                 [&](const Implies& i) { print_list("implies", {i.lhs, i.rhs}, out); },
                 [&](const Iff& i) { print_list("iff", {i.lhs, i.rhs}, out); },
                 [&](const Is& a) { out += "(is " + a.type_name + " " + a.var + ")"; },
                 [&](const LinkAtom& a) { out += "(link " + a.rel_name + " " + a.source + " " + a.target + ")"; },
                 [&](const AttrEq& a) {
                   out += "(attr= " + a.lhs.var + "." + a.lhs.attr + " " + a.rhs.var + "." + a.rhs.attr + ")";
                 },
                 [&](const AttrNeq& a) {
                   out += "(attr!= " + a.lhs.var + "." + a.lhs.attr + " " + a.rhs.var + "." + a.rhs.attr + ")";
                 },
                 [&](const VarNeq& a) { out += "(!= " + a.lhs + " " + a.rhs + ")"; },
                 [&](const Tag& a) { out += "(tag " + a.tag_name + " " + a.var + ")"; },
             },
             f.node);
}

}  // namespace

void check_well_formed(const Formula& f, const Schema& schema, const std::vector<std::string>& free_vars) {
  WellFormed(schema, free_vars).check(f);
}

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

std::size_t depth(const Formula& f) {
  auto max_depth = [](const std::vector<FormulaPtr>& items) {
    std::size_t d = 0;
    for (const auto& i : items) d = std::max(d, depth(*i));
    return d;
  };
  return std::visit(overloaded{
                        [&](const Forall& q) { return 1 + depth(*q.body); },
                        [&](const Exists& q) { return 1 + depth(*q.body); },
                        [&](const And& c) { return 1 + max_depth(c.items); },
                        [&](const Or& c) { return 1 + max_depth(c.items); },
                        [&](const Not& n) { return 1 + depth(*n.item); },
                        [&](const Implies& i) { return 1 + std::max(depth(*i.lhs), depth(*i.rhs)); },
                        [&](const Iff& i) { return 1 + std::max(depth(*i.lhs), depth(*i.rhs)); },
                        [](const auto&) -> std::size_t { return 0; },
                    },
                    f.node);
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

enum class Kind { Forall, Exists, And, Or, Not, Implies, Iff, Is, Link, AttrEq, AttrNeq, VarNeq, Tag, False };

// Formula with variables resolved to slots and names resolved to indexes.
struct Node {
  Kind kind = Kind::False;
  std::vector<Node> kids;
  int a = -1, b = -1;   // variable slots
  int ref = -1;         // type, relation or tag index
  std::string attr_a, attr_b;

  // Quantifier plan. kids = guards followed by the optional rest.
  std::vector<int> slots;
  std::size_t n_guards = 0;
  bool has_rest = false;
  std::vector<std::vector<std::size_t>> checks_at;  // guard indexes to test once slots[0..d) are bound
  std::vector<const std::vector<int>*> candidates;
  // A link guard tying slots[j] to an already bound variable; when present,
  // the candidates for slots[j] are that variable's neighbours.
  struct Adjacent {
    int rel = -1;
    int other = -1;
    bool other_is_source = true;
  };
  std::vector<std::optional<Adjacent>> adjacent;
  std::set<int> free;  // slots referenced but not bound inside this node
};

}  // namespace

struct Evaluator::Index {
  const KnowledgeBase& kb;
  const Schema& schema;
  std::vector<const Individual*> individuals;  // ascending id
  std::unordered_map<std::string_view, int> id_index;
  std::unordered_map<std::string_view, int> type_index;
  std::vector<std::vector<int>> type_members;  // per schema term, ascending
  std::vector<std::vector<bool>> type_member_mask;
  std::vector<std::vector<int>> tag_members;
  std::vector<std::vector<bool>> tag_member_mask;
  std::unordered_map<std::string_view, int> rel_index;
  std::unordered_set<std::uint64_t> links;
  // Per relation: individual -> ascending neighbours.
  std::vector<std::unordered_map<int, std::vector<int>>> out_adj, in_adj;
  std::vector<int> everyone;
  const std::vector<int> none;

  Index(const KnowledgeBase& k, const Schema& s) : kb(k), schema(s) {
    for (const auto& [id, ind] : kb.individuals()) {
      id_index.emplace(ind.id, static_cast<int>(individuals.size()));
      everyone.push_back(static_cast<int>(individuals.size()));
      individuals.push_back(&ind);
    }
    const std::size_t n = individuals.size();
    const auto& terms = schema.terms();
    type_members.resize(terms.size());
    type_member_mask.assign(terms.size(), std::vector<bool>(n, false));
    for (std::size_t t = 0; t < terms.size(); ++t) type_index.emplace(terms[t].canonical_name, static_cast<int>(t));
    for (std::size_t i = 0; i < n; ++i) {
      const std::string& declared = individuals[i]->type_name;
      if (!schema.has_term(declared)) continue;
      for (const auto& anc : schema.ancestors(declared)) {
        const int t = type_index.at(anc);
        type_members[t].push_back(static_cast<int>(i));
        type_member_mask[t][i] = true;
      }
    }
    const auto& tags = classification_tags();
    tag_members.resize(tags.size());
    tag_member_mask.assign(tags.size(), std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      auto it = individuals[i]->attrs.find(kClassificationAttr);
      if (it == individuals[i]->attrs.end()) continue;
      for (const auto& token : split_tags(it->second)) {
        auto pos = std::find(tags.begin(), tags.end(), token);
        if (pos == tags.end()) continue;
        const auto t = static_cast<std::size_t>(pos - tags.begin());
        if (!tag_member_mask[t][i]) {
          tag_member_mask[t][i] = true;
          tag_members[t].push_back(static_cast<int>(i));
        }
      }
    }
    for (const auto& l : kb.links()) {
      auto [it, inserted] = rel_index.emplace(l.rel_name, static_cast<int>(rel_index.size()));
      auto s_it = id_index.find(l.source);
      auto t_it = id_index.find(l.target);
      if (s_it == id_index.end() || t_it == id_index.end()) continue;
      links.insert(link_key(it->second, s_it->second, t_it->second));
      out_adj.resize(rel_index.size());
      in_adj.resize(rel_index.size());
      out_adj[static_cast<std::size_t>(it->second)][s_it->second].push_back(t_it->second);
      in_adj[static_cast<std::size_t>(it->second)][t_it->second].push_back(s_it->second);
    }
    for (auto* adj : {&out_adj, &in_adj}) {
      for (auto& per_rel : *adj) {
        for (auto& [node, xs] : per_rel) std::sort(xs.begin(), xs.end());
      }
    }
  }

  const std::vector<int>& neighbours(int rel, int node, bool outgoing) const {
    const auto& per_rel = (outgoing ? out_adj : in_adj)[static_cast<std::size_t>(rel)];
    auto it = per_rel.find(node);
    return it == per_rel.end() ? none : it->second;
  }

  static std::uint64_t link_key(int rel, int source, int target) {
    return (static_cast<std::uint64_t>(rel) << 44) | (static_cast<std::uint64_t>(source) << 22) |
           static_cast<std::uint64_t>(target);
  }

  const std::string* attr(int individual, const std::string& name) const {
    const auto& attrs = individuals[static_cast<std::size_t>(individual)]->attrs;
    auto it = attrs.find(name);
    return it == attrs.end() ? nullptr : &it->second;
  }
};

namespace {

class Compiler {
 public:
  Compiler(const Evaluator::Index& index, std::vector<std::string> free_vars) : index_(index) {
    for (auto& v : free_vars) bind(std::move(v));
  }

  int slot_count() const { return next_slot_; }
  const std::vector<std::pair<std::string, int>>& scope() const { return scope_; }

  Node compile(const Formula& f) {
    Node n = std::visit(
        overloaded{
            [&](const Forall& q) { return quantifier(Kind::Forall, q.vars, *q.body); },
            [&](const Exists& q) { return quantifier(Kind::Exists, q.vars, *q.body); },
            [&](const And& c) { return list(Kind::And, c.items); },
            [&](const Or& c) { return list(Kind::Or, c.items); },
            [&](const Not& x) { return list(Kind::Not, {x.item}); },
            [&](const Implies& x) { return list(Kind::Implies, {x.lhs, x.rhs}); },
            [&](const Iff& x) { return list(Kind::Iff, {x.lhs, x.rhs}); },
            [&](const Is& x) {
              Node node;
              node.kind = Kind::Is;
              node.ref = index_.type_index.at(x.type_name);
              node.a = lookup(x.var);
              return node;
            },
            [&](const LinkAtom& x) {
              Node node;
              auto it = index_.rel_index.find(x.rel_name);
              // A relation with no links in the KB can never hold.
              node.kind = it == index_.rel_index.end() ? Kind::False : Kind::Link;
              node.ref = it == index_.rel_index.end() ? -1 : it->second;
              node.a = lookup(x.source);
              node.b = lookup(x.target);
              return node;
            },
            [&](const AttrEq& x) { return attr(Kind::AttrEq, x.lhs, x.rhs); },
            [&](const AttrNeq& x) { return attr(Kind::AttrNeq, x.lhs, x.rhs); },
            [&](const VarNeq& x) {
              Node node;
              node.kind = Kind::VarNeq;
              node.a = lookup(x.lhs);
              node.b = lookup(x.rhs);
              return node;
            },
            [&](const Tag& x) {
              Node node;
              node.kind = Kind::Tag;
              const auto& tags = classification_tags();
              node.ref = static_cast<int>(std::find(tags.begin(), tags.end(), x.tag_name) - tags.begin());
              node.a = lookup(x.var);
              return node;
            },
        },
        f.node);
    if (n.kind != Kind::Forall && n.kind != Kind::Exists) {
      if (n.a >= 0) n.free.insert(n.a);
      if (n.b >= 0) n.free.insert(n.b);
      for (const auto& k : n.kids) n.free.insert(k.free.begin(), k.free.end());
    }
    return n;
  }

 private:
  int bind(std::string name) {
    const int slot = next_slot_++;
    scope_.emplace_back(std::move(name), slot);
    return slot;
  }

  int lookup(const std::string& name) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->first == name) return it->second;
    }
    throw FormulaError("unbound variable '" + name + "'");
  }

  Node list(Kind kind, const std::vector<FormulaPtr>& items) {
    Node n;
    n.kind = kind;
    for (const auto& i : items) n.kids.push_back(compile(*i));
    return n;
  }

  Node attr(Kind kind, const AttrRef& lhs, const AttrRef& rhs) {
    Node n;
    n.kind = kind;
    n.a = lookup(lhs.var);
    n.attr_a = lhs.attr;
    n.b = lookup(rhs.var);
    n.attr_b = rhs.attr;
    return n;
  }

  static void flatten_and(const Formula& f, std::vector<const Formula*>& out) {
    if (const auto* a = std::get_if<And>(&f.node)) {
      for (const auto& i : a->items) flatten_and(*i, out);
    } else {
      out.push_back(&f);
    }
  }

  Node quantifier(Kind kind, const std::vector<std::string>& vars, const Formula& body) {
    Node n;
    n.kind = kind;
    const std::size_t scope_mark = scope_.size();
    for (const auto& v : vars) n.slots.push_back(bind(v));

    std::vector<const Formula*> guards;
    const Formula* rest = &body;
    if (kind == Kind::Forall) {
      if (const auto* imp = std::get_if<Implies>(&body.node)) {
        flatten_and(*imp->lhs, guards);
        rest = imp->rhs.get();
      }
    } else if (std::holds_alternative<And>(body.node)) {
      flatten_and(body, guards);
      rest = nullptr;
    }
    for (const Formula* g : guards) n.kids.push_back(compile(*g));
    n.n_guards = guards.size();
    if (rest) {
      n.kids.push_back(compile(*rest));
      n.has_rest = true;
    }
    scope_.resize(scope_mark);

    for (const auto& k : n.kids) n.free.insert(k.free.begin(), k.free.end());
    for (int s : n.slots) n.free.erase(s);

    // Schedule each guard right after its last block variable is bound.
    n.checks_at.assign(n.slots.size() + 1, {});
    for (std::size_t g = 0; g < n.n_guards; ++g) {
      std::size_t at = 0;
      for (std::size_t j = 0; j < n.slots.size(); ++j) {
        if (n.kids[g].free.count(n.slots[j])) at = j + 1;
      }
      n.checks_at[at].push_back(g);
    }

    // Unary type/tag guards narrow the candidate list of their variable.
    n.candidates.assign(n.slots.size(), &index_.everyone);
    for (std::size_t j = 0; j < n.slots.size(); ++j) {
      for (std::size_t g = 0; g < n.n_guards; ++g) {
        const Node& guard = n.kids[g];
        if (guard.a != n.slots[j]) continue;
        const std::vector<int>* narrowed = nullptr;
        if (guard.kind == Kind::Is) narrowed = &index_.type_members[static_cast<std::size_t>(guard.ref)];
        if (guard.kind == Kind::Tag) narrowed = &index_.tag_members[static_cast<std::size_t>(guard.ref)];
        if (narrowed && narrowed->size() < n.candidates[j]->size()) n.candidates[j] = narrowed;
      }
    }

    n.adjacent.assign(n.slots.size(), std::nullopt);
    for (std::size_t j = 0; j < n.slots.size(); ++j) {
      auto bound = [&](int slot) {
        if (n.free.count(slot)) return true;
        return std::find(n.slots.begin(), n.slots.begin() + static_cast<std::ptrdiff_t>(j), slot) !=
               n.slots.begin() + static_cast<std::ptrdiff_t>(j);
      };
      for (std::size_t g = 0; g < n.n_guards && !n.adjacent[j]; ++g) {
        const Node& guard = n.kids[g];
        if (guard.kind != Kind::Link || guard.a == guard.b) continue;
        if (guard.b == n.slots[j] && bound(guard.a)) n.adjacent[j] = Node::Adjacent{guard.ref, guard.a, true};
        if (guard.a == n.slots[j] && bound(guard.b)) n.adjacent[j] = Node::Adjacent{guard.ref, guard.b, false};
      }
    }
    return n;
  }

  const Evaluator::Index& index_;
  std::vector<std::pair<std::string, int>> scope_;
  int next_slot_ = 0;
};

class Machine {
 public:
  explicit Machine(const Evaluator::Index& index) : index_(index) {}

  bool eval(const Node& n, std::vector<int>& env) const {
    switch (n.kind) {
      case Kind::False: return false;
      case Kind::Forall:
      case Kind::Exists: return quantify(n, env, nullptr);
      case Kind::And:
        for (const auto& k : n.kids) {
          if (!eval(k, env)) return false;
        }
        return true;
      case Kind::Or:
        for (const auto& k : n.kids) {
          if (eval(k, env)) return true;
        }
        return false;
      case Kind::Not: return !eval(n.kids[0], env);
      case Kind::Implies: return !eval(n.kids[0], env) || eval(n.kids[1], env);
      case Kind::Iff: return eval(n.kids[0], env) == eval(n.kids[1], env);
      case Kind::Is:
        return index_.type_member_mask[static_cast<std::size_t>(n.ref)][static_cast<std::size_t>(env[n.a])];
      case Kind::Tag:
        return index_.tag_member_mask[static_cast<std::size_t>(n.ref)][static_cast<std::size_t>(env[n.a])];
      case Kind::Link: return index_.links.count(Evaluator::Index::link_key(n.ref, env[n.a], env[n.b])) > 0;
      case Kind::AttrEq:
      case Kind::AttrNeq: {
        const std::string* lhs = index_.attr(env[n.a], n.attr_a);
        const std::string* rhs = index_.attr(env[n.b], n.attr_b);
        if (!lhs || !rhs) return false;
        return (*lhs == *rhs) == (n.kind == Kind::AttrEq);
      }
      case Kind::VarNeq: return env[n.a] != env[n.b];
    }
    return false;
  }

  /// Evaluates a quantifier block. When `witness` is non-null it receives
  /// the deciding binding (falsifying for forall, satisfying for exists).
  bool quantify(const Node& n, std::vector<int>& env, std::vector<int>* witness) const {
    const bool universal = n.kind == Kind::Forall;
    if (!guards_hold(n, 0, env)) return universal;
    const bool found = search(n, 0, env, universal, witness);
    return universal ? !found : found;
  }

 private:
  bool guards_hold(const Node& n, std::size_t depth, std::vector<int>& env) const {
    for (std::size_t g : n.checks_at[depth]) {
      if (!eval(n.kids[g], env)) return false;
    }
    return true;
  }

  // Looks for a binding with all guards true and the rest false (forall)
  // or true (exists).
  bool search(const Node& n, std::size_t j, std::vector<int>& env, bool universal,
              std::vector<int>* witness) const {
    if (j == n.slots.size()) {
      const bool rest = !n.has_rest || eval(n.kids.back(), env);
      if (rest == universal) return false;
      if (witness) {
        witness->clear();
        for (int s : n.slots) witness->push_back(env[s]);
      }
      return true;
    }
    const int slot = n.slots[j];
    const int saved = env[slot];
    const auto& adj = n.adjacent[j];
    const std::vector<int>& candidates =
        adj ? index_.neighbours(adj->rel, env[static_cast<std::size_t>(adj->other)], adj->other_is_source)
            : *n.candidates[j];
    for (int c : candidates) {
      env[slot] = c;
      if (guards_hold(n, j + 1, env) && search(n, j + 1, env, universal, witness)) {
        env[slot] = saved;
        return true;
      }
    }
    env[slot] = saved;
    return false;
  }

  const Evaluator::Index& index_;
};

}  // namespace

Evaluator::Evaluator(const KnowledgeBase& kb, const Schema& schema)
    : index_(std::make_unique<Index>(kb, schema)) {}

Evaluator::~Evaluator() = default;

bool Evaluator::evaluate(const Formula& f, const Binding& env) const {
  std::vector<std::string> free_vars;
  for (const auto& [name, id] : env) free_vars.push_back(name);
  check_well_formed(f, index_->schema, free_vars);
  Compiler compiler(*index_, free_vars);
  const Node root = compiler.compile(f);
  std::vector<int> slots(static_cast<std::size_t>(compiler.slot_count()), -1);
  for (const auto& [name, slot] : compiler.scope()) {
    auto it = index_->id_index.find(env.find(name)->second);
    if (it == index_->id_index.end()) {
      throw NotFoundError("binding of '" + name + "' names unknown individual '" + env.find(name)->second + "'");
    }
    slots[static_cast<std::size_t>(slot)] = it->second;
  }
  return Machine(*index_).eval(root, slots);
}

EvalResult Evaluator::evaluate_with_witness(const Formula& f) const {
  check_well_formed(f, index_->schema);
  Compiler compiler(*index_, {});
  const Node root = compiler.compile(f);
  std::vector<int> slots(static_cast<std::size_t>(compiler.slot_count()), -1);
  Machine machine(*index_);
  if (root.kind != Kind::Forall && root.kind != Kind::Exists) return {machine.eval(root, slots), std::nullopt};

  std::vector<int> chosen;
  const bool value = machine.quantify(root, slots, &chosen);
  EvalResult result{value, std::nullopt};
  const bool decided_by_witness = (root.kind == Kind::Forall) ? !value : value;
  if (decided_by_witness && !chosen.empty()) {
    const auto& vars = std::holds_alternative<Forall>(f.node) ? std::get<Forall>(f.node).vars
                                                             : std::get<Exists>(f.node).vars;
    Binding w;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      w[vars[i]] = index_->individuals[static_cast<std::size_t>(chosen[i])]->id;
    }
    result.witness = std::move(w);
  }
  return result;
}

bool evaluate(const KnowledgeBase& kb, const Schema& schema, const Formula& f) {
  return Evaluator(kb, schema).evaluate(f);
}

EvalResult evaluate_with_witness(const KnowledgeBase& kb, const Schema& schema, const Formula& f) {
  return Evaluator(kb, schema).evaluate_with_witness(f);
}

}  // namespace testtdo::fol
