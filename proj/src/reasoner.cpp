#include "ilx/reasoner.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace ilx {

std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::R3: return "R3";
    case Rule::R4: return "R4";
    case Rule::R5: return "R5";
    case Rule::R7: return "R7";
    case Rule::Rm: return "Rm";
  }
  return "?";
}

namespace {

using NodeId = int;

struct IFact {
  Fact::Kind kind;
  NodeId s;
  int p;  // class index for Type, relation index for Edge, -1 for Same
  NodeId o;

  friend bool operator==(const IFact&, const IFact&) = default;
};

struct IFactHash {
  std::size_t operator()(const IFact& f) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(f.kind);
    for (std::int64_t v : {static_cast<std::int64_t>(f.s), static_cast<std::int64_t>(f.p),
                           static_cast<std::int64_t>(f.o)})
      h = (h ^ static_cast<std::uint64_t>(v)) * 0x100000001b3ULL + 0x9e3779b97f4a7c15ULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

using IPremise = std::variant<IFact, Axiom>;

struct IDerivation {
  Rule rule;
  IFact conclusion;
  std::vector<IPremise> premises;
};

IFact type_fact(NodeId x, int c) { return {Fact::Kind::Type, x, c, -1}; }
IFact edge_fact(NodeId s, int p, NodeId o) { return {Fact::Kind::Edge, s, p, o}; }
IFact same_fact(NodeId a, NodeId b) { return {Fact::Kind::Same, a, -1, b}; }

class Engine {
 public:
  Engine(const LexiconModel& model, const SaturateOptions& options)
      : model_(model), options_(options), n_classes_(model.classes().size()),
        n_relations_(model.relations().size()) {
    if (options_.order_seed) rng_.seed(*options_.order_seed);
    slot_range_.assign(n_classes_ * n_relations_, -1);
    class_slots_.resize(n_classes_);
    for (std::size_t c = 0; c < n_classes_; ++c) {
      for (const auto& [rel, slot] : model.slot_table(c)) {
        const int r = static_cast<int>(*model.relation_index(rel));
        const int range = static_cast<int>(*model.class_index(slot.range));
        slot_range_[c * n_relations_ + r] = range;
        class_slots_[c].push_back({r, range});
      }
    }
    chain_positions_.resize(n_relations_);
    for (std::size_t i = 0; i < model.chains().size(); ++i) {
      const auto& chain = model.chains()[i];
      std::vector<int> elements;
      for (const auto& e : chain.chain) elements.push_back(static_cast<int>(*model.relation_index(e)));
      chains_.push_back({std::move(elements), static_cast<int>(*model.relation_index(chain.super_relation))});
      for (std::size_t pos = 0; pos < chain.chain.size(); ++pos)
        chain_positions_[*model.relation_index(chain.chain[pos])].push_back({static_cast<int>(i), static_cast<int>(pos)});
    }
    domain_.assign(n_relations_, -1);
    range_.assign(n_relations_, -1);
    for (std::size_t r = 0; r < n_relations_; ++r) {
      const auto& def = model.relations()[r];
      if (def.domain) domain_[r] = static_cast<int>(*model.class_index(*def.domain));
      if (def.range) range_[r] = static_cast<int>(*model.class_index(*def.range));
    }
  }

  Saturation run(const SemGraph& input) {
    load(input);
    while (!work_empty()) process(pop());
    return result(input);
  }

 private:
  struct WorkItem {
    IFact fact;
  };

  // ---- node table -------------------------------------------------------

  NodeId intern(const std::string& name) {
    auto [it, inserted] = id_of_.try_emplace(name, static_cast<NodeId>(names_.size()));
    if (inserted) {
      names_.push_back(name);
      parent_.push_back(it->second);
      has_type_.resize(names_.size() * n_classes_, false);
      types_.emplace_back();
      out_rels_.emplace_back();
      in_rels_.emplace_back();
    }
    return it->second;
  }

  NodeId find(NodeId x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool alive(NodeId x) const { return parent_[x] == x; }

  std::uint64_t key(NodeId node, int rel) const {
    return static_cast<std::uint64_t>(node) * n_relations_ + static_cast<std::uint64_t>(rel);
  }

  // ---- fact store -------------------------------------------------------

  void record(Rule rule, const IFact& conclusion, std::vector<IPremise> premises) {
    derivations_.push_back({rule, conclusion, std::move(premises)});
  }

  bool add_type(NodeId x, int c) {
    auto bit = has_type_[static_cast<std::size_t>(x) * n_classes_ + c];
    if (bit) return false;
    has_type_[static_cast<std::size_t>(x) * n_classes_ + c] = true;
    types_[x].push_back(c);
    push(type_fact(x, c));
    return true;
  }

  void derive_type(NodeId x, int c, Rule rule, std::vector<IPremise> premises) {
    if (add_type(x, c)) record(rule, type_fact(x, c), std::move(premises));
  }

  bool add_edge(NodeId s, int p, NodeId o) {
    if (!edges_.insert(edge_fact(s, p, o)).second) return false;
    auto& objects = out_[key(s, p)];
    if (objects.empty()) out_rels_[s].push_back(p);
    objects.push_back(o);
    auto& subjects = in_[key(o, p)];
    if (subjects.empty()) in_rels_[o].push_back(p);
    subjects.push_back(s);
    push(edge_fact(s, p, o));
    return true;
  }

  void derive_edge(NodeId s, int p, NodeId o, Rule rule, std::vector<IPremise> premises) {
    if (add_edge(s, p, o)) record(rule, edge_fact(s, p, o), std::move(premises));
  }

  void remove_edge(NodeId s, int p, NodeId o) {
    edges_.erase(edge_fact(s, p, o));
    auto erase_one = [](std::vector<NodeId>& v, NodeId x) {
      auto it = std::find(v.begin(), v.end(), x);
      if (it != v.end()) v.erase(it);
    };
    if (auto it = out_.find(key(s, p)); it != out_.end()) erase_one(it->second, o);
    if (auto it = in_.find(key(o, p)); it != in_.end()) erase_one(it->second, s);
  }

  void request_merge(NodeId y, NodeId z, std::vector<IPremise> premises) {
    const auto pair = std::minmax(y, z);
    if (!requested_.insert(static_cast<std::uint64_t>(pair.first) << 32 | static_cast<std::uint32_t>(pair.second)).second)
      return;
    record(Rule::R5, same_fact(y, z), std::move(premises));
    push(same_fact(y, z));
  }

  // ---- work queue -------------------------------------------------------

  void push(const IFact& f) { work_.push_back(f); }
  bool work_empty() const { return work_.empty(); }

  IFact pop() {
    if (options_.order_seed) {
      std::uniform_int_distribution<std::size_t> pick(0, work_.size() - 1);
      std::swap(work_[pick(rng_)], work_.back());
      IFact f = work_.back();
      work_.pop_back();
      return f;
    }
    IFact f = work_.front();
    work_.pop_front();
    return f;
  }

  template <std::size_t N>
  void run_rules(std::array<std::function<void()>, N>& rules) {
    if (options_.order_seed) std::shuffle(rules.begin(), rules.end(), rng_);
    for (auto& r : rules) r();
  }

  // ---- axioms as premises ----------------------------------------------

  const Qid& class_name(int c) const { return model_.classes()[c].name; }
  const Qid& relation_name(int r) const { return model_.relations()[r].name; }

  Axiom sub_class(int c, int d) const { return {Axiom::Kind::SubClass, class_name(c), class_name(d), {}, {}}; }
  Axiom sub_relation(int p, int q) const {
    return {Axiom::Kind::SubRelation, relation_name(p), relation_name(q), {}, {}};
  }
  Axiom chain_axiom(int i) const {
    const auto& c = model_.chains()[i];
    return {Axiom::Kind::Chain, {}, c.super_relation, c.chain, {}};
  }
  Axiom domain_axiom(int p) const { return {Axiom::Kind::Domain, relation_name(p), class_name(domain_[p]), {}, {}}; }
  Axiom range_axiom(int p) const { return {Axiom::Kind::Range, relation_name(p), class_name(range_[p]), {}, {}}; }
  Axiom slot_axiom(int c, int p) const {
    const ConPSlot& slot = model_.slot_table(c).at(relation_name(p));
    return {Axiom::Kind::Slot, class_name(c), slot.range, {slot.relation}, slot.cardinality};
  }

  // ---- rules ------------------------------------------------------------

  void process(const IFact& f) {
    switch (f.kind) {
      case Fact::Kind::Type:
        if (alive(f.s)) process_type(f.s, f.p);
        break;
      case Fact::Kind::Edge:
        if (alive(f.s) && alive(f.o)) process_edge(f.s, f.p, f.o);
        break;
      case Fact::Kind::Same:
        merge(f.s, f.o);
        break;
    }
  }

  void process_type(NodeId x, int c) {
    std::array<std::function<void()>, 2> rules = {
        [&] {  // R1
          for (std::size_t d : model_.class_ancestors(c)) {
            if (static_cast<int>(d) == c) continue;
            derive_type(x, static_cast<int>(d), Rule::R1, {type_fact(x, c), sub_class(c, static_cast<int>(d))});
          }
        },
        [&] {  // R7 and R5 over the edges already present
          for (const auto& [p, range] : class_slots_[c]) {
            auto it = out_.find(key(x, p));
            if (it == out_.end() || it->second.empty()) continue;
            const std::vector<NodeId> objects = it->second;
            if (options_.slot_range_typing) {
              for (NodeId o : objects)
                derive_type(o, range, Rule::R7, {type_fact(x, c), slot_axiom(c, p), edge_fact(x, p, o)});
            }
            for (std::size_t k = 1; k < objects.size(); ++k) {
              request_merge(objects[0], objects[k],
                            {type_fact(x, c), slot_axiom(c, p), edge_fact(x, p, objects[0]),
                             edge_fact(x, p, objects[k])});
            }
          }
        },
    };
    run_rules(rules);
  }

  void process_edge(NodeId s, int p, NodeId o) {
    std::array<std::function<void()>, 4> rules = {
        [&] {  // R2
          for (std::size_t q : model_.relation_ancestors(p)) {
            if (static_cast<int>(q) == p) continue;
            derive_edge(s, static_cast<int>(q), o, Rule::R2, {edge_fact(s, p, o), sub_relation(p, static_cast<int>(q))});
          }
        },
        [&] {  // R4
          if (domain_[p] >= 0) derive_type(s, domain_[p], Rule::R4, {edge_fact(s, p, o), domain_axiom(p)});
          if (range_[p] >= 0) derive_type(o, range_[p], Rule::R4, {edge_fact(s, p, o), range_axiom(p)});
        },
        [&] {  // R3
          for (const auto& [chain, pos] : chain_positions_[p]) join_chain(chain, pos, s, o);
        },
        [&] {  // R7 and R5 for the subject's slot on p
          const std::vector<int> types = types_[s];
          for (int c : types) {
            const int range = slot_range_[static_cast<std::size_t>(c) * n_relations_ + p];
            if (range < 0) continue;
            if (options_.slot_range_typing)
              derive_type(o, range, Rule::R7, {type_fact(s, c), slot_axiom(c, p), edge_fact(s, p, o)});
            const auto& objects = out_[key(s, p)];
            for (NodeId other : objects) {
              if (other == o) continue;
              request_merge(other, o,
                            {type_fact(s, c), slot_axiom(c, p), edge_fact(s, p, other), edge_fact(s, p, o)});
              break;
            }
          }
        },
    };
    run_rules(rules);
  }

  struct Path {
    NodeId end;
    std::vector<IFact> edges;
  };

  // All paths matching elements [from, to) of the chain that start at
  // `start` (walking forward) or end at `start` (walking backward).
  std::vector<Path> walk(const std::vector<int>& elements, int from, int to, NodeId start, bool forward) {
    std::vector<Path> paths{{start, {}}};
    if (forward) {
      for (int i = from; i < to; ++i) {
        std::vector<Path> next;
        for (const auto& path : paths) {
          auto it = out_.find(key(path.end, elements[i]));
          if (it == out_.end()) continue;
          for (NodeId w : it->second) {
            Path p = path;
            p.edges.push_back(edge_fact(path.end, elements[i], w));
            p.end = w;
            next.push_back(std::move(p));
          }
        }
        paths = std::move(next);
      }
    } else {
      for (int i = to - 1; i >= from; --i) {
        std::vector<Path> next;
        for (const auto& path : paths) {
          auto it = in_.find(key(path.end, elements[i]));
          if (it == in_.end()) continue;
          for (NodeId w : it->second) {
            Path p = path;
            p.edges.insert(p.edges.begin(), edge_fact(w, elements[i], path.end));
            p.end = w;
            next.push_back(std::move(p));
          }
        }
        paths = std::move(next);
      }
    }
    return paths;
  }

  void join_chain(int chain, int pos, NodeId s, NodeId o) {
    const auto& [elements, super] = chains_[chain];
    const int n = static_cast<int>(elements.size());
    const auto left = walk(elements, 0, pos, s, false);
    if (left.empty()) return;
    const auto right = walk(elements, pos + 1, n, o, true);
    for (const auto& l : left) {
      for (const auto& r : right) {
        std::vector<IPremise> premises;
        premises.reserve(n + 1);
        for (const auto& e : l.edges) premises.emplace_back(e);
        premises.emplace_back(edge_fact(s, elements[pos], o));
        for (const auto& e : r.edges) premises.emplace_back(e);
        premises.emplace_back(chain_axiom(chain));
        derive_edge(l.end, super, r.end, Rule::R3, std::move(premises));
      }
    }
  }

  void merge(NodeId y, NodeId z) {
    const NodeId ry = find(y), rz = find(z);
    if (ry == rz) return;
    const bool y_first = names_[ry] < names_[rz];
    const NodeId rep = y_first ? ry : rz;
    const NodeId loser = y_first ? rz : ry;
    parent_[loser] = rep;
    const IFact equality = same_fact(loser, rep);
    merge_events_.push_back({y, z});

    for (int c : std::vector<int>(types_[loser]))
      derive_type(rep, c, Rule::Rm, {type_fact(loser, c), equality});

    for (int p : std::vector<int>(out_rels_[loser])) {
      auto node = out_.extract(key(loser, p));
      if (node.empty()) continue;
      for (NodeId o : node.mapped()) {
        edges_.erase(edge_fact(loser, p, o));
        if (auto it = in_.find(key(o, p)); it != in_.end()) {
          auto& v = it->second;
          v.erase(std::remove(v.begin(), v.end(), loser), v.end());
        }
      }
      for (NodeId o : node.mapped())
        derive_edge(rep, p, o == loser ? rep : o, Rule::Rm, {edge_fact(loser, p, o), equality});
    }
    for (int p : std::vector<int>(in_rels_[loser])) {
      auto node = in_.extract(key(loser, p));
      if (node.empty()) continue;
      for (NodeId s : node.mapped()) {
        if (s == loser) continue;
        remove_edge(s, p, loser);
      }
      for (NodeId s : node.mapped()) {
        if (s == loser) continue;
        derive_edge(s, p, rep, Rule::Rm, {edge_fact(s, p, loser), equality});
      }
    }
    out_rels_[loser].clear();
    in_rels_[loser].clear();
  }

  // ---- input / output ---------------------------------------------------

  void load(const SemGraph& input) {
    for (const auto& [node, types] : input.nodes) {
      const NodeId x = intern(node);
      for (const auto& t : types) add_type(x, static_cast<int>(*model_.class_index(t)));
    }
    for (const auto& e : input.edges)
      add_edge(intern(e.subject), static_cast<int>(*model_.relation_index(e.relation)), intern(e.object));
    // Raw input graphs map every node to itself; saturated inputs may carry
    // earlier merges.
    for (const auto& [node, rep] : input.representative) {
      const NodeId a = intern(node), b = intern(rep);
      if (a != b) parent_[a] = b;
    }
    if (options_.order_seed) std::shuffle(work_.begin(), work_.end(), rng_);
  }

  Fact to_public(const IFact& f) const {
    switch (f.kind) {
      case Fact::Kind::Type: return Fact::type(names_[f.s], class_name(f.p));
      case Fact::Kind::Edge: return Fact::edge(names_[f.s], relation_name(f.p), names_[f.o]);
      case Fact::Kind::Same: return Fact::same(names_[f.s], names_[f.o]);
    }
    return {};
  }

  Saturation result(const SemGraph& input) {
    Saturation out;
    SemGraph& g = out.graph;
    g.name = input.name;
    for (NodeId x = 0; x < static_cast<NodeId>(names_.size()); ++x) {
      g.representative[names_[x]] = names_[find(x)];
      if (!alive(x)) continue;
      auto& types = g.nodes[names_[x]];
      for (int c : types_[x]) types.insert(class_name(c));
    }
    for (const auto& e : edges_) g.edges.insert({names_[e.s], relation_name(e.p), names_[e.o]});
    for (const auto& [node, cls] : input.asserted_types) g.asserted_types.insert({g.canonical(node), cls});
    for (const auto& e : input.asserted_edges)
      g.asserted_edges.insert({g.canonical(e.subject), e.relation, g.canonical(e.object)});

    out.derivations.reserve(derivations_.size());
    for (const auto& d : derivations_) {
      Derivation pub{d.rule, to_public(d.conclusion), {}};
      pub.premises.reserve(d.premises.size());
      for (const auto& p : d.premises) {
        if (const auto* f = std::get_if<IFact>(&p)) {
          pub.premises.emplace_back(to_public(*f));
        } else {
          pub.premises.emplace_back(std::get<Axiom>(p));
        }
      }
      out.derivations.push_back(std::move(pub));
    }
    return out;
  }

  const LexiconModel& model_;
  SaturateOptions options_;
  std::size_t n_classes_;
  std::size_t n_relations_;
  std::mt19937_64 rng_;

  std::vector<int> slot_range_;  // class * relations + relation -> range class or -1
  std::vector<std::vector<std::pair<int, int>>> class_slots_;
  std::vector<std::pair<std::vector<int>, int>> chains_;
  std::vector<std::vector<std::pair<int, int>>> chain_positions_;  // relation -> (chain, position)
  std::vector<int> domain_;
  std::vector<int> range_;

  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> id_of_;
  std::vector<NodeId> parent_;
  std::vector<bool> has_type_;
  std::vector<std::vector<int>> types_;
  std::unordered_set<IFact, IFactHash> edges_;
  std::unordered_map<std::uint64_t, std::vector<NodeId>> out_;
  std::unordered_map<std::uint64_t, std::vector<NodeId>> in_;
  std::vector<std::vector<int>> out_rels_;
  std::vector<std::vector<int>> in_rels_;
  std::unordered_set<std::uint64_t> requested_;
  std::vector<std::pair<NodeId, NodeId>> merge_events_;

  std::deque<IFact> work_;
  std::vector<IDerivation> derivations_;
};

}  // namespace

Saturation saturate(const LexiconModel& model, const SemGraph& graph, const SaturateOptions& options) {
  if (auto errors = check_graph_refs(model, graph); !errors.empty()) throw ContractError(errors.front());
  return Engine(model, options).run(graph);
}

// ---- rendering --------------------------------------------------------------

std::string render(const Fact& fact) {
  switch (fact.kind) {
    case Fact::Kind::Type: return fact.subject + " : " + fact.predicate.local;
    case Fact::Kind::Edge: return fact.subject + ' ' + fact.predicate.local + ' ' + fact.object;
    case Fact::Kind::Same: return fact.subject + " = " + fact.object;
  }
  return {};
}

std::string render(const Axiom& axiom) {
  switch (axiom.kind) {
    case Axiom::Kind::SubClass:
    case Axiom::Kind::SubRelation: return axiom.first.local + " < " + axiom.second.local;
    case Axiom::Kind::Chain: {
      std::string out;
      for (const auto& r : axiom.relations) out += (out.empty() ? "" : "/") + r.local;
      return out + " < " + axiom.second.local;
    }
    case Axiom::Kind::Domain: return "domain(" + axiom.first.local + ") = " + axiom.second.local;
    case Axiom::Kind::Range: return "range(" + axiom.first.local + ") = " + axiom.second.local;
    case Axiom::Kind::Slot: {
      const std::string rel = axiom.relations.empty() ? "?" : axiom.relations.front().local;
      const std::string card = axiom.cardinality ? std::string(to_string(*axiom.cardinality)) : "?";
      return axiom.first.local + " { (" + rel + ") -> " + card + ' ' + axiom.second.local + " }";
    }
  }
  return {};
}

namespace {

class Explainer {
 public:
  explicit Explainer(std::span<const Derivation> derivations) {
    for (const auto& d : derivations) {
      by_conclusion_.try_emplace(d.conclusion, &d);
      if (d.conclusion.kind == Fact::Kind::Same) {
        merge_links_[d.conclusion.subject].push_back(&d);
        merge_links_[d.conclusion.object].push_back(&d);
      }
    }
  }

  void fact(std::ostream& out, const Fact& f, int depth) {
    if (f.kind == Fact::Kind::Same) {
      same(out, f.subject, f.object, depth);
      return;
    }
    auto it = by_conclusion_.find(f);
    if (it == by_conclusion_.end()) {
      line(out, depth) << render(f) << "  <= asserted\n";
      return;
    }
    derivation(out, *it->second, depth);
  }

 private:
  std::ostream& line(std::ostream& out, int depth) {
    for (int i = 0; i < depth; ++i) out << "  ";
    return out;
  }

  void derivation(std::ostream& out, const Derivation& d, int depth) {
    line(out, depth) << render(d.conclusion) << "  <= " << to_string(d.rule) << '\n';
    for (const auto& p : d.premises) {
      if (const auto* f = std::get_if<Fact>(&p)) {
        fact(out, *f, depth + 1);
      } else {
        line(out, depth + 1) << "axiom " << render(std::get<Axiom>(p)) << '\n';
      }
    }
  }

  // Equalities come from R5 merges; a path of several merges is chained
  // by equality substitution (Rm).
  void same(std::ostream& out, const std::string& a, const std::string& b, int depth) {
    std::map<std::string, std::pair<std::string, const Derivation*>> prev;
    std::deque<std::string> queue{a};
    prev[a] = {a, nullptr};
    while (!queue.empty() && !prev.contains(b)) {
      const std::string v = queue.front();
      queue.pop_front();
      auto it = merge_links_.find(v);
      if (it == merge_links_.end()) continue;
      for (const Derivation* d : it->second) {
        const std::string& w = d->conclusion.subject == v ? d->conclusion.object : d->conclusion.subject;
        if (prev.contains(w)) continue;
        prev[w] = {v, d};
        queue.push_back(w);
      }
    }
    if (!prev.contains(b)) {
      line(out, depth) << a << " = " << b << "  <= (no recorded merge)\n";
      return;
    }
    std::vector<const Derivation*> steps;
    for (std::string v = b; v != a; v = prev[v].first) steps.push_back(prev[v].second);
    std::reverse(steps.begin(), steps.end());
    if (steps.size() == 1) {
      derivation(out, *steps.front(), depth);
      return;
    }
    line(out, depth) << a << " = " << b << "  <= " << to_string(Rule::Rm) << '\n';
    for (const Derivation* d : steps) derivation(out, *d, depth + 1);
  }

  std::map<Fact, const Derivation*> by_conclusion_;
  std::map<std::string, std::vector<const Derivation*>> merge_links_;
};

}  // namespace

std::string explain(const SemGraph& saturated, std::span<const Derivation> derivations, const Fact& fact) {
  Fact f = fact;
  switch (f.kind) {
    case Fact::Kind::Type:
      f.subject = saturated.canonical(f.subject);
      if (!saturated.has_type(f.subject, f.predicate))
        throw std::out_of_range("fact does not hold: " + render(fact));
      break;
    case Fact::Kind::Edge:
      f.subject = saturated.canonical(f.subject);
      f.object = saturated.canonical(f.object);
      if (!saturated.has_edge(f.subject, f.predicate, f.object))
        throw std::out_of_range("fact does not hold: " + render(fact));
      break;
    case Fact::Kind::Same:
      if (!saturated.representative.contains(f.subject) || !saturated.representative.contains(f.object) ||
          saturated.canonical(f.subject) != saturated.canonical(f.object))
        throw std::out_of_range("fact does not hold: " + render(fact));
      if (f.subject == f.object) return render(f) + "  <= reflexive\n";
      break;
  }
  std::ostringstream out;
  Explainer(derivations).fact(out, f, 0);
  return out.str();
}

std::optional<Fact> parse_fact(const LexiconModel& model, std::string_view text) {
  std::string normalized;
  for (char c : text) {
    if (c == ':' || c == '=') {
      normalized += ' ';
      normalized += c;
      normalized += ' ';
    } else {
      normalized += c;
    }
  }
  std::istringstream in(normalized);
  std::vector<std::string> parts;
  for (std::string w; in >> w;) parts.push_back(w);
  if (parts.size() != 3) return std::nullopt;
  if (parts[1] == "=") return Fact::same(parts[0], parts[2]);
  if (parts[1] == ":") {
    Qid cls = Qid::lexicon(parts[2]);
    if (!model.find_class(cls)) return std::nullopt;
    return Fact::type(parts[0], std::move(cls));
  }
  Qid rel = Qid::lexicon(parts[1]);
  if (!model.find_relation(rel)) return std::nullopt;
  return Fact::edge(parts[0], std::move(rel), parts[2]);
}

}  // namespace ilx
