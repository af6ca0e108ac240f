#include "ilx/model.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "ilx/parser.hpp"
#include "ilx/turtle.hpp"

namespace ilx {

std::string_view to_string(ClassKind k) {
  switch (k) {
    case ClassKind::Primitive: return "Primitive";
    case ClassKind::SemanticallyVoid: return "SemanticallyVoid";
    case ClassKind::Derived: return "Derived";
  }
  return "?";
}

std::string_view to_string(Cardinality c) { return c == Cardinality::ExactlyOne ? "1" : "?"; }

const ClassDef* LexiconModel::find_class(const Qid& name) const {
  auto i = class_index(name);
  return i ? &classes_[*i] : nullptr;
}

const RelationDef* LexiconModel::find_relation(const Qid& name) const {
  auto i = relation_index(name);
  return i ? &relations_[*i] : nullptr;
}

std::optional<std::size_t> LexiconModel::class_index(const Qid& name) const {
  if (name.prefix != kLexiconPrefix) return std::nullopt;
  auto it = class_by_local_.find(name.local);
  if (it == class_by_local_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> LexiconModel::relation_index(const Qid& name) const {
  if (name.prefix != kLexiconPrefix) return std::nullopt;
  auto it = relation_by_local_.find(name.local);
  if (it == relation_by_local_.end()) return std::nullopt;
  return it->second;
}

bool LexiconModel::class_leq(std::size_t sub, std::size_t super) const { return class_leq_[sub][super]; }

bool LexiconModel::relation_leq(std::size_t sub, std::size_t super) const {
  return relation_leq_[sub][super];
}

std::optional<std::string> LexiconModel::namespace_iri(std::string_view label) const {
  if (auto it = prefixes_.find(std::string(label)); it != prefixes_.end()) return it->second;
  const auto defaults = Namespaces::defaults();
  if (defaults.all().contains(std::string(label))) return defaults.iri(std::string(label));
  return std::nullopt;
}

namespace {

// Strongly connected components that contain a cycle (size > 1 or a
// self-loop), each sorted ascending.
std::vector<std::vector<std::size_t>> cyclic_components(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> out;
  std::size_t counter = 0;

  struct Frame {
    std::size_t node;
    std::size_t next_edge;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next_edge < adj[f.node].size()) {
        const std::size_t w = adj[f.node][f.next_edge++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], index[w]);
        }
        continue;
      }
      const std::size_t v = f.node;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().node] = std::min(low[frames.back().node], low[v]);
      if (low[v] != index[v]) continue;
      std::vector<std::size_t> component;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component.push_back(w);
      } while (w != v);
      const bool self_loop = std::find(adj[v].begin(), adj[v].end(), v) != adj[v].end();
      if (component.size() > 1 || self_loop) {
        std::sort(component.begin(), component.end());
        out.push_back(std::move(component));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Order in which every node comes after all nodes it points to.
std::vector<std::size_t> supers_first_order(const std::vector<std::vector<std::size_t>>& up) {
  const std::size_t n = up.size();
  std::vector<std::size_t> order;
  std::vector<int> state(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (state[root]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> frames{{root, 0}};
    state[root] = 1;
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      if (next < up[v].size()) {
        const std::size_t w = up[v][next++];
        if (!state[w]) {
          state[w] = 1;
          frames.push_back({w, 0});
        }
        continue;
      }
      order.push_back(v);
      state[v] = 2;
      frames.pop_back();
    }
  }
  return order;
}

void close_upwards(const std::vector<std::vector<std::size_t>>& up, std::vector<std::vector<bool>>& leq,
                   std::vector<std::vector<std::size_t>>& ancestors) {
  const std::size_t n = up.size();
  leq.assign(n, std::vector<bool>(n, false));
  ancestors.assign(n, {});
  for (std::size_t v : supers_first_order(up)) {
    leq[v][v] = true;
    for (std::size_t s : up[v])
      for (std::size_t a = 0; a < n; ++a)
        if (leq[s][a]) leq[v][a] = true;
    for (std::size_t a = 0; a < n; ++a)
      if (leq[v][a]) ancestors[v].push_back(a);
  }
}

}  // namespace

class ModelBuilder {
 public:
  BuildResult build(std::span<const Statement> statements) {
    for (const auto& s : statements) declare(s);
    check_name_clashes();
    for (const auto& s : statements) resolve(s);
    check_union_ranges();
    check_cycles();
    if (has_errors(diags_)) {
      sort_diagnostics(diags_);
      return {std::nullopt, std::move(diags_)};
    }
    compute_closures();
    assign_domains();
    resolve_all_slots();
    sort_diagnostics(m_.resolution_findings_);
    sort_diagnostics(diags_);
    return {std::move(m_), std::move(diags_)};
  }

 private:
  void error(std::string_view code, const std::string& subject, std::string message,
             const SourceSpan& span) {
    diags_.push_back(Diagnostic::error(code, subject, std::move(message), span));
  }

  void finding(Diagnostic d) { m_.resolution_findings_.push_back(std::move(d)); }

  void declare(const Statement& s) {
    if (const auto* p = std::get_if<PrefixDecl>(&s.payload)) {
      if (is_reserved_prefix(p->label.text)) {
        error(codes::kDuplicate, p->label.text, "prefix '" + p->label.text + "' is reserved",
              p->label.span);
      } else if (!m_.prefixes_.emplace(p->label.text, p->iri).second) {
        error(codes::kDuplicate, p->label.text, "prefix '" + p->label.text + "' declared twice",
              p->label.span);
      }
    } else if (const auto* r = std::get_if<RelationDecl>(&s.payload)) {
      if (r->head.size() != 1) return;
      const Name& n = r->head.front();
      if (m_.relation_by_local_.contains(n.text)) {
        if (r->supers.empty())
          error(codes::kDuplicate, Qid::lexicon(n.text).str(), "relation declared twice", n.span);
        return;
      }
      m_.relation_by_local_.emplace(n.text, m_.relations_.size());
      m_.relations_.push_back({Qid::lexicon(n.text), {}, std::nullopt, std::nullopt, n.span});
    } else if (const auto* c = std::get_if<ClassDecl>(&s.payload)) {
      const Name& n = c->name;
      if (m_.class_by_local_.contains(n.text)) {
        error(codes::kDuplicate, Qid::lexicon(n.text).str(), "class defined twice", n.span);
        return;
      }
      m_.class_by_local_.emplace(n.text, m_.classes_.size());
      ClassDef def;
      def.name = Qid::lexicon(n.text);
      def.span = n.span;
      m_.classes_.push_back(std::move(def));
      class_decls_.push_back(c);
    }
  }

  void check_name_clashes() {
    for (const auto& c : m_.classes_) {
      auto it = m_.relation_by_local_.find(c.name.local);
      if (it == m_.relation_by_local_.end()) continue;
      error(codes::kDuplicate, c.name.str(), "name is declared both as a class and as a relation",
            c.span);
    }
  }

  std::optional<std::size_t> relation_ref(const Name& n) {
    auto it = m_.relation_by_local_.find(n.text);
    if (it != m_.relation_by_local_.end()) return it->second;
    const bool is_class = m_.class_by_local_.contains(n.text);
    error(codes::kUnknownRelation, Qid::lexicon(n.text).str(),
          is_class ? "'" + n.text + "' is a class, not a relation" : "unknown relation '" + n.text + "'",
          n.span);
    return std::nullopt;
  }

  std::optional<std::size_t> class_ref(const Name& n) {
    auto it = m_.class_by_local_.find(n.text);
    if (it != m_.class_by_local_.end()) return it->second;
    const bool is_relation = m_.relation_by_local_.contains(n.text);
    error(codes::kUnknownClass, Qid::lexicon(n.text).str(),
          is_relation ? "'" + n.text + "' is a relation, not a class" : "unknown class '" + n.text + "'",
          n.span);
    return std::nullopt;
  }

  void add_super(std::size_t sub, std::size_t super, const SourceSpan& span) {
    auto& supers = m_.relations_[sub].super_relations;
    const Qid& q = m_.relations_[super].name;
    if (std::find(supers.begin(), supers.end(), q) != supers.end()) {
      error(codes::kDuplicate, m_.relations_[sub].name.str(),
            "axiom " + m_.relations_[sub].name.local + " < " + q.local + " stated twice", span);
      return;
    }
    supers.push_back(q);
  }

  void resolve(const Statement& s) {
    if (const auto* r = std::get_if<RelationDecl>(&s.payload)) {
      resolve_relation(*r, s.span);
    } else if (const auto* c = std::get_if<ClassDecl>(&s.payload)) {
      resolve_class(*c);
    }
  }

  void resolve_relation(const RelationDecl& r, const SourceSpan& span) {
    std::vector<std::size_t> head, supers;
    bool ok = true;
    for (const auto& n : r.head) {
      auto i = relation_ref(n);
      ok = ok && i.has_value();
      if (i) head.push_back(*i);
    }
    for (const auto& n : r.supers) {
      auto i = relation_ref(n);
      ok = ok && i.has_value();
      if (i) supers.push_back(*i);
    }
    if (!ok) return;
    if (head.size() >= 2) {
      ChainAxiom axiom;
      for (std::size_t i : head) axiom.chain.push_back(m_.relations_[i].name);
      axiom.super_relation = m_.relations_[supers.front()].name;
      axiom.span = span;
      if (std::find(m_.chains_.begin(), m_.chains_.end(), axiom) != m_.chains_.end()) {
        error(codes::kDuplicate, axiom.super_relation.str(), "property chain axiom stated twice", span);
      } else {
        m_.chains_.push_back(std::move(axiom));
      }
    } else if (!supers.empty()) {
      add_super(head.front(), supers.front(), span);
    }
    for (std::size_t i = 0; i + 1 < supers.size(); ++i) add_super(supers[i], supers[i + 1], span);
  }

  void resolve_class(const ClassDecl& decl) {
    auto idx = m_.class_by_local_.at(decl.name.text);
    // A duplicate definition resolves nothing; the first one wins.
    if (class_decls_[idx] != &decl) return;
    ClassDef& def = m_.classes_[idx];
    auto resolve_list = [&](const std::vector<Name>& names, std::vector<Qid>& out, const char* what) {
      for (const auto& n : names) {
        if (!class_ref(n)) continue;
        Qid q = Qid::lexicon(n.text);
        if (std::find(out.begin(), out.end(), q) != out.end()) {
          error(codes::kDuplicate, def.name.str(), "'" + n.text + "' listed twice as " + what, n.span);
          continue;
        }
        out.push_back(std::move(q));
      }
    };
    resolve_list(decl.parents, def.parents, "parent");
    resolve_list(decl.union_members, def.union_members, "union member");
    for (const auto& slot : decl.slots) {
      const bool rel_ok = relation_ref(slot.relation).has_value();
      const bool range_ok = class_ref(slot.range).has_value();
      if (!rel_ok || !range_ok) continue;
      Qid rel = Qid::lexicon(slot.relation.text);
      auto same = [&](const ConPSlot& s) { return s.relation == rel; };
      if (std::any_of(def.declared_slots.begin(), def.declared_slots.end(), same)) {
        error(codes::kDuplicate, def.name.str(), "two slots on relation '" + rel.local + "'", slot.span);
        continue;
      }
      def.declared_slots.push_back({std::move(rel), Qid::lexicon(slot.range.text), slot.cardinality,
                                    slot.sets_domain_range, SlotOrigin::declared_here(), slot.span});
    }
    std::sort(def.declared_slots.begin(), def.declared_slots.end(),
              [](const ConPSlot& a, const ConPSlot& b) { return a.relation < b.relation; });
  }

  void check_union_ranges() {
    for (const auto& c : m_.classes_) {
      for (const auto& s : c.declared_slots) {
        const ClassDef* range = m_.find_class(s.range);
        if (range && !range->union_members.empty()) {
          error(codes::kUnknownClass, c.name.str(),
                "union class '" + s.range.local + "' cannot be used as a slot range", *s.span);
        }
      }
    }
  }

  std::vector<std::vector<std::size_t>> class_up_edges() const {
    std::vector<std::vector<std::size_t>> up(m_.classes_.size());
    for (std::size_t c = 0; c < m_.classes_.size(); ++c) {
      for (const auto& p : m_.classes_[c].parents) up[c].push_back(*m_.class_index(p));
      for (const auto& member : m_.classes_[c].union_members) up[*m_.class_index(member)].push_back(c);
    }
    return up;
  }

  std::vector<std::vector<std::size_t>> relation_up_edges() const {
    std::vector<std::vector<std::size_t>> up(m_.relations_.size());
    for (std::size_t r = 0; r < m_.relations_.size(); ++r)
      for (const auto& s : m_.relations_[r].super_relations) up[r].push_back(*m_.relation_index(s));
    return up;
  }

  // element -> super over chains only. A chain may mention its own super
  // (r/s < r is fine); mutual chain definitions are not.
  std::vector<std::vector<std::size_t>> chain_edges() const {
    std::vector<std::vector<std::size_t>> up(m_.relations_.size());
    for (const auto& chain : m_.chains_) {
      const std::size_t super = *m_.relation_index(chain.super_relation);
      for (const auto& e : chain.chain) {
        const std::size_t from = *m_.relation_index(e);
        if (from != super) up[from].push_back(super);
      }
    }
    return up;
  }

  template <typename Defs>
  std::string describe_cycle(const Defs& defs, const std::vector<std::size_t>& members) {
    std::string out;
    for (std::size_t i : members) {
      if (!out.empty()) out += ", ";
      out += defs[i].name.local;
    }
    return out;
  }

  void check_cycles() {
    for (const auto& comp : cyclic_components(class_up_edges())) {
      const ClassDef& first = m_.classes_[comp.front()];
      error(codes::kSubclassCycle, first.name.str(),
            "subclass cycle through " + describe_cycle(m_.classes_, comp), first.span);
    }
    for (const auto& comp : cyclic_components(relation_up_edges())) {
      const RelationDef& first = m_.relations_[comp.front()];
      error(codes::kSubrelationCycle, first.name.str(),
            "sub-relation cycle through " + describe_cycle(m_.relations_, comp), first.span);
    }
    for (const auto& comp : cyclic_components(chain_edges())) {
      const RelationDef& first = m_.relations_[comp.front()];
      error(codes::kSubrelationCycle, first.name.str(),
            "property chains define each other through " + describe_cycle(m_.relations_, comp),
            first.span);
    }
  }

  void compute_closures() {
    class_up_ = class_up_edges();
    close_upwards(class_up_, m_.class_leq_, m_.class_ancestors_);
    close_upwards(relation_up_edges(), m_.relation_leq_, m_.relation_ancestors_);
  }

  bool leq(const Qid& sub, const Qid& super) const {
    return m_.class_leq(*m_.class_index(sub), *m_.class_index(super));
  }

  void assign_domains() {
    for (const auto& c : m_.classes_) {
      for (const auto& s : c.declared_slots) {
        if (!s.sets_domain_range) continue;
        RelationDef& r = m_.relations_[*m_.relation_index(s.relation)];
        if (!r.domain) {
          r.domain = c.name;
          r.range = s.range;
          continue;
        }
        const bool domain_ok = leq(c.name, *r.domain) || leq(*r.domain, c.name);
        const bool range_ok = leq(s.range, *r.range) || leq(*r.range, s.range);
        if (!domain_ok || !range_ok) {
          finding(Diagnostic::error(codes::kDomainRangeClash, c.name.str(),
                                    "relation '" + r.name.local + "' already has domain " +
                                        r.domain->local + " and range " + r.range->local +
                                        ", unrelated to " + c.name.local + " / " + s.range.local,
                                    s.span));
        }
      }
    }
  }

  struct Candidate {
    ConPSlot slot;
    Qid owner;
  };

  void resolve_all_slots() {
    const std::size_t n = m_.classes_.size();
    m_.slot_tables_.assign(n, {});
    m_.slot_conflicts_.assign(n, false);
    for (std::size_t c : supers_first_order(class_up_)) resolve_slots(c);
  }

  void resolve_slots(std::size_t c) {
    const ClassDef& def = m_.classes_[c];
    std::map<Qid, std::vector<Candidate>> inherited;
    for (std::size_t s : class_up_[c]) {
      for (const auto& [rel, slot] : m_.slot_tables_[s]) {
        Qid owner = slot.origin.kind == SlotOrigin::Kind::InheritedFrom ? *slot.origin.from
                                                                         : m_.classes_[s].name;
        auto& list = inherited[rel];
        const bool seen = std::any_of(list.begin(), list.end(), [&](const Candidate& k) {
          return k.owner == owner && k.slot.range == slot.range && k.slot.cardinality == slot.cardinality;
        });
        if (!seen) list.push_back({slot, std::move(owner)});
      }
    }

    SlotTable& table = m_.slot_tables_[c];
    for (const auto& [rel, cands] : inherited) {
      const Candidate* chosen = nullptr;
      for (const auto& a : cands) {
        if (std::all_of(cands.begin(), cands.end(),
                        [&](const Candidate& b) { return leq(a.slot.range, b.slot.range); })) {
          chosen = &a;
          break;
        }
      }
      const bool obligatory = std::any_of(cands.begin(), cands.end(),
                                          [](const Candidate& k) { return k.slot.obligatory(); });
      const Cardinality inherited_card = obligatory ? Cardinality::ExactlyOne : Cardinality::AtMostOne;
      auto local = std::find_if(def.declared_slots.begin(), def.declared_slots.end(),
                                [&](const ConPSlot& s) { return s.relation == rel; });

      if (local == def.declared_slots.end()) {
        const Candidate& base = chosen ? *chosen : cands.front();
        ConPSlot eff = base.slot;
        eff.origin = SlotOrigin::inherited_from(base.owner);
        eff.sets_domain_range = false;
        eff.cardinality = inherited_card;
        if (!chosen) {
          m_.slot_conflicts_[c] = true;
          finding(Diagnostic::error(codes::kInheritanceConflict, def.name.str(),
                                    conflict_message(rel, cands) +
                                        "; restate the slot with a range subsumed by all of them",
                                    def.span));
        }
        table.emplace(rel, std::move(eff));
        continue;
      }

      ConPSlot eff = *local;
      eff.origin = SlotOrigin::restricted_from(chosen ? chosen->owner : cands.front().owner);
      if (obligatory) eff.cardinality = Cardinality::ExactlyOne;
      if (!chosen) {
        const bool reconciles = std::all_of(cands.begin(), cands.end(), [&](const Candidate& k) {
          return leq(local->range, k.slot.range);
        });
        if (!reconciles) {
          m_.slot_conflicts_[c] = true;
          finding(Diagnostic::error(codes::kInheritanceConflict, def.name.str(),
                                    conflict_message(rel, cands) + " and the restated range " +
                                        local->range.local + " is not subsumed by all of them",
                                    local->span));
        }
      } else if (!leq(local->range, chosen->slot.range)) {
        finding(Diagnostic::error(codes::kRangeWidening, def.name.str(),
                                  "slot (" + rel.local + ") range " + local->range.local +
                                      " is not subsumed by the inherited range " +
                                      chosen->slot.range.local + " from " + chosen->owner.local,
                                  local->span));
      } else if (local->range == chosen->slot.range && local->cardinality == inherited_card) {
        finding(Diagnostic::warning(codes::kRedundantRestatement, def.name.str(),
                                    "slot (" + rel.local + ") restates the slot inherited from " +
                                        chosen->owner.local + " unchanged",
                                    local->span));
      }
      if (local->cardinality == Cardinality::AtMostOne && obligatory) {
        finding(Diagnostic::error(codes::kCardinalityRelaxed, def.name.str(),
                                  "slot (" + rel.local + ") is obligatory in an ancestor and cannot be "
                                  "made optional",
                                  local->span));
      }
      table.emplace(rel, std::move(eff));
    }
    for (const auto& s : def.declared_slots) {
      if (inherited.contains(s.relation)) continue;
      ConPSlot eff = s;
      eff.origin = SlotOrigin::declared_here();
      table.emplace(s.relation, std::move(eff));
    }
  }

  static std::string conflict_message(const Qid& rel, const std::vector<Candidate>& cands) {
    std::ostringstream os;
    os << "inherited slots on (" << rel.local << ") have incomparable ranges";
    for (std::size_t i = 0; i < cands.size(); ++i)
      os << (i ? ", " : " ") << cands[i].slot.range.local << " (from " << cands[i].owner.local << ')';
    return os.str();
  }

  LexiconModel m_;
  std::vector<Diagnostic> diags_;
  std::vector<const ClassDecl*> class_decls_;
  std::vector<std::vector<std::size_t>> class_up_;
};

BuildResult build_model(std::span<const Statement> declarations) {
  return ModelBuilder().build(declarations);
}

BuildResult build_model_from_text(std::string_view text, std::string file) {
  ParseResult parsed = parse(text, std::move(file));
  if (has_errors(parsed.diagnostics)) {
    sort_diagnostics(parsed.diagnostics);
    return {std::nullopt, std::move(parsed.diagnostics)};
  }
  return build_model(parsed.statements);
}

namespace {

std::size_t require_class(const LexiconModel& model, const Qid& q) {
  if (auto i = model.class_index(q)) return *i;
  throw ContractError(Diagnostic::error(codes::kUnknownClass, q.str(), "undeclared class"));
}

std::size_t require_relation(const LexiconModel& model, const Qid& q) {
  if (auto i = model.relation_index(q)) return *i;
  throw ContractError(Diagnostic::error(codes::kUnknownRelation, q.str(), "undeclared relation"));
}

}  // namespace

bool subsumes(const LexiconModel& model, const Qid& sub, const Qid& super) {
  return model.class_leq(require_class(model, sub), require_class(model, super));
}

bool subrel(const LexiconModel& model, const Qid& sub, const Qid& super) {
  return model.relation_leq(require_relation(model, sub), require_relation(model, super));
}

SlotTable effective_slots(const LexiconModel& model, const Qid& cls) {
  const std::size_t c = require_class(model, cls);
  if (model.slot_conflict(c)) {
    throw ContractError(Diagnostic::error(codes::kInheritanceConflict, cls.str(),
                                          "unreconciled multiple-inheritance slot conflict"));
  }
  return model.slot_table(c);
}

ClassKind classify_class(const LexiconModel& model, const Qid& cls) {
  const ClassDef& def = model.classes()[require_class(model, cls)];
  if (!def.parents.empty() || !def.union_members.empty()) return ClassKind::Derived;
  return def.declared_slots.empty() ? ClassKind::SemanticallyVoid : ClassKind::Primitive;
}

}  // namespace ilx
